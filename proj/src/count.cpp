#include "sweepcover/count.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <mutex>

#include "sweepcover/enumerate.hpp"
#include "sweepcover/error.hpp"

namespace sweepcover {

IntRange parse_range(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      throw Error(Errc::InvalidParams, "bad integer '" + std::string(s) + "' in range");
    }
    return value;
  };
  IntRange range;
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    range = {parse_int(text.substr(0, dots)), parse_int(text.substr(dots + 2))};
  } else {
    int v = parse_int(text);
    range = {v, v};
  }
  if (range.lo > range.hi) throw Error(Errc::InvalidParams, "empty range '" + std::string(text) + "'");
  return range;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt stirling2(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 1;
  if (k == 0) return 0;
  // Row by row: S(i,j) = j S(i-1,j) + S(i-1,j-1).
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) {
      row[static_cast<std::size_t>(j)] =
          j * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
    }
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt count_nonsingleton(int n, int m) {
  if (n < 0 || m < 0) return 0;
  BigInt total = 0;
  for (int s = n - m; s <= n; ++s) {
    BigInt term = binomial(n, s) * stirling2(s, s + m - n);
    if ((n - s) % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

namespace {

void check_raney(const RaneyParams& params) {
  if (params.p < 1 || params.r < 1 || params.k < 0) {
    throw Error(Errc::InvalidParams, "Raney numbers need p >= 1, r >= 1, k >= 0");
  }
}

void check_recurrence(int delta, int gamma) {
  if (delta < 2 || gamma < 0) {
    throw Error(Errc::InvalidParams, "recurrence needs delta >= 2 and gamma >= 0, got delta=" +
                                         std::to_string(delta) + " gamma=" + std::to_string(gamma));
  }
}

void check_n(int n) {
  if (n < 1) throw Error(Errc::InvalidParams, "n must be >= 1, got " + std::to_string(n));
}

}  // namespace

BigInt raney(const RaneyParams& params) {
  check_raney(params);
  const int top = params.k * params.p + params.r;
  BigInt numerator = params.r * binomial(top, params.k);
  if (numerator % top != 0) {
    throw Error(Errc::NonIntegerResult, "C_{" + std::to_string(params.p) + "," +
                                            std::to_string(params.r) + "}(" +
                                            std::to_string(params.k) + ") is not integral");
  }
  return numerator / top;
}

BigInt catalan(int k) { return raney({2, 1, k}); }

SweepCountRecurrence::SweepCountRecurrence(int delta, int gamma)
    : delta_(delta), gamma_(gamma), p_{0} {
  check_recurrence(delta, gamma);
}

const BigInt& SweepCountRecurrence::p(int n) {
  check_n(n);
  while (static_cast<int>(p_.size()) <= n) {
    const int m = static_cast<int>(p_.size());
    BigInt value;
    if (m == 1) {
      value = gamma_ + 1;
    } else {
      for (int l = 1; l <= delta_ - 2; ++l) {
        BigInt inner = 0;
        for (int r = 1; r <= delta_ - l; ++r) {
          inner += this->l(m - r, l) * count_nonsingleton(delta_ - l, r);
        }
        value += binomial(delta_, l) * inner;
      }
      value += this->l(m, delta_);
      value += count_nonsingleton(delta_, m);
    }
    p_.push_back(std::move(value));
  }
  return p_[static_cast<std::size_t>(n)];
}

BigInt SweepCountRecurrence::l(int n, int i) {
  if (i < 0) throw Error(Errc::InvalidParams, "L needs i >= 0");
  if (n < 0) return 0;
  if (i == 0) return n == 0 ? 1 : 0;
  if (n < i) return 0;

  const auto ii = static_cast<std::size_t>(i);
  const auto nn = static_cast<std::size_t>(n);
  if (l_.size() <= ii) {
    l_.resize(ii + 1);
    l_known_.resize(ii + 1);
  }
  if (l_[ii].size() <= nn) {
    l_[ii].resize(nn + 1);
    l_known_[ii].resize(nn + 1, false);
  }
  if (l_known_[ii][nn]) return l_[ii][nn];

  // Split off the first part of the composition.
  BigInt total = 0;
  for (int first = 1; first <= n - i + 1; ++first) {
    BigInt head = p(first);
    total += head * l(n - first, i - 1);
  }
  l_[ii][nn] = total;
  l_known_[ii][nn] = true;
  return total;
}

namespace {

std::mutex cache_mutex;
std::map<std::pair<int, int>, SweepCountRecurrence>& cache() {
  static std::map<std::pair<int, int>, SweepCountRecurrence> evaluators;
  return evaluators;
}

SweepCountRecurrence& evaluator(int delta, int gamma) {
  check_recurrence(delta, gamma);
  auto& c = cache();
  auto it = c.find({delta, gamma});
  if (it == c.end()) it = c.emplace(std::make_pair(delta, gamma), SweepCountRecurrence(delta, gamma)).first;
  return it->second;
}

BigInt l_uncached(int delta, int gamma, int n, int i);

BigInt p_uncached(int delta, int gamma, int n) {
  if (n == 1) return gamma + 1;
  BigInt value = 0;
  for (int l = 1; l <= delta - 2; ++l) {
    for (int r = 1; r <= delta - l; ++r) {
      value += binomial(delta, l) * l_uncached(delta, gamma, n - r, l) *
               count_nonsingleton(delta - l, r);
    }
  }
  return value + l_uncached(delta, gamma, n, delta) + count_nonsingleton(delta, n);
}

BigInt l_uncached(int delta, int gamma, int n, int i) {
  BigInt total = 0;
  if (n < 1 || i < 1) return total;
  for_each_composition(n, i, [&](std::span<const int> parts) {
    BigInt product = 1;
    for (int k : parts) product *= p_uncached(delta, gamma, k);
    total += product;
  });
  return total;
}

}  // namespace

BigInt p_count(int delta, int gamma, int n) {
  check_n(n);
  std::lock_guard lock(cache_mutex);
  return evaluator(delta, gamma).p(n);
}

BigInt l_delta(int delta, int gamma, int n, int i) {
  std::lock_guard lock(cache_mutex);
  return evaluator(delta, gamma).l(n, i);
}

BigInt p_count_uncached(int delta, int gamma, int n) {
  check_recurrence(delta, gamma);
  check_n(n);
  return p_uncached(delta, gamma, n);
}

PTable p_table(IntRange deltas, IntRange ns, int gamma) {
  if (deltas.lo < 2 || deltas.lo > deltas.hi || ns.lo < 1 || ns.lo > ns.hi || gamma < 0) {
    throw Error(Errc::InvalidParams, "table needs 2 <= delta range, 1 <= n range, gamma >= 0");
  }
  PTable table{deltas, ns, gamma, {}};
  for (int d = deltas.lo; d <= deltas.hi; ++d) {
    std::vector<BigInt> row;
    for (int n = ns.lo; n <= ns.hi; ++n) row.push_back(p_count(d, gamma, n));
    table.cells.push_back(std::move(row));
  }
  return table;
}

std::vector<BigInt> series_coefficients(int delta, int gamma, int n_max) {
  check_n(n_max);
  std::vector<BigInt> out;
  for (int n = 1; n <= n_max; ++n) out.push_back(p_count(delta, gamma, n));
  return out;
}

RaneyDecomposition raney_decomposition_check(int p, int r, int k) {
  if (p < 1 || r < 1 || k < 1) {
    throw Error(Errc::InvalidParams, "decomposition needs p >= 1, r >= 1, k >= 1");
  }
  RaneyDecomposition result;
  result.direct = raney({p, r, k});
  result.decomposed = 0;
  for (int l = 1; l <= r; ++l) {
    BigInt inner = 0;
    for_each_composition(k - 1, l, [&](std::span<const int> parts) {
      BigInt product = 1;
      for (int h : parts) product *= raney({p, 1, h + 1});
      inner += product;
    });
    result.decomposed += binomial(r, l) * inner;
  }
  result.holds = result.direct == result.decomposed;
  return result;
}

std::vector<BoundRow> raney_bound_report(int delta, int gamma, IntRange ns) {
  check_recurrence(delta, gamma);
  if (ns.lo < 1 || ns.lo > ns.hi) throw Error(Errc::InvalidParams, "n range must start at >= 1");
  std::vector<BoundRow> rows;
  for (int n = ns.lo; n <= ns.hi; ++n) {
    BoundRow row{delta, n, p_count(delta, gamma, n), raney({delta, 1, n + 1}), false};
    row.inequality_holds = row.p >= row.raney;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<GrowthRow> growth_report(int delta, int gamma, int n_max) {
  check_recurrence(delta, gamma);
  if (n_max < 2) throw Error(Errc::InvalidParams, "growth report needs n_max >= 2");
  std::vector<GrowthRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    GrowthRow row;
    row.n = n;
    row.p = p_count(delta, gamma, n);
    const double value = row.p.convert_to<double>();
    if (n > 1) {
      const double prev = rows.back().p.convert_to<double>();
      if (prev != 0.0) row.ratio = value / prev;
    }
    row.nth_root = std::pow(value, 1.0 / n);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string to_scientific(const BigInt& value, int digits) {
  if (digits < 1) throw Error(Errc::InvalidParams, "need at least one significant digit");
  const bool negative = value < 0;
  std::string s = (negative ? BigInt(-value) : value).str();
  if (s == "0") {
    return "0." + std::string(static_cast<std::size_t>(digits - 1), '0') + "E+00";
  }
  int exponent = static_cast<int>(s.size()) - 1;
  const auto d = static_cast<std::size_t>(digits);
  std::string head = s.substr(0, std::min(d, s.size()));
  head.resize(d, '0');
  if (s.size() > d && s[d] >= '5') {
    // Round half up, carrying through nines.
    std::size_t i = d;
    while (i > 0 && head[i - 1] == '9') head[--i] = '0';
    if (i == 0) {
      head.insert(head.begin(), '1');
      head.pop_back();
      ++exponent;
    } else {
      ++head[i - 1];
    }
  }
  std::string out = negative ? "-" : "";
  out += head[0];
  if (d > 1) out += "." + head.substr(1);
  std::string exp = std::to_string(exponent);
  if (exp.size() < 2) exp.insert(exp.begin(), '0');
  out += "E+" + exp;
  return out;
}

}  // namespace sweepcover

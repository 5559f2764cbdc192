#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sweepcover {

using BigInt = boost::multiprecision::cpp_int;

// Inclusive integer interval, written "lo..hi" on the command line.
struct IntRange {
  int lo = 1;
  int hi = 1;
  bool operator==(const IntRange&) const = default;
};

// Accepts "A..B" or a single integer "A". Throws Error(InvalidParams).
IntRange parse_range(std::string_view text);

// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

// Set partitions of n elements into k non-empty blocks. S(0,0) = 1; any
// out-of-range argument (negative, k > n) gives 0.
BigInt stirling2(int n, int k);

// Partitions of n elements into m blocks of size >= 2, evaluated as the
// alternating binomial-Stirling sum.
BigInt count_nonsingleton(int n, int m);

struct RaneyParams {
  int p = 1;
  int r = 1;
  int k = 0;
};

// r/(kp+r) * binom(kp+r, k). Throws Error(NonIntegerResult) if the division
// is not exact, Error(InvalidParams) unless p >= 1, r >= 1, k >= 0.
BigInt raney(const RaneyParams& params);
BigInt catalan(int k);

// Memoized evaluation of the sweep-cover recurrence on Delta-ary trees with
// path length gamma between stars:
//   P(1) = gamma + 1
//   P(n) = sum_{l=1}^{Delta-2} binom(Delta,l) sum_{r=1}^{Delta-l} L(n-r,l) R(Delta-l,r)
//          + L(n,Delta) + R(Delta,n)
// where L(n,i) sums the product of P over all compositions of n into i
// positive parts and R is count_nonsingleton.
class SweepCountRecurrence {
 public:
  SweepCountRecurrence(int delta, int gamma);

  int delta() const { return delta_; }
  int gamma() const { return gamma_; }

  const BigInt& p(int n);
  BigInt l(int n, int i);

 private:
  int delta_;
  int gamma_;
  std::vector<BigInt> p_;                 // p_[n], valid for n < p_.size()
  std::vector<std::vector<BigInt>> l_;    // l_[i][n], filled on demand
  std::vector<std::vector<bool>> l_known_;
};

// Backed by a process-wide cache keyed on (delta, gamma, n); safe to call
// from several threads.
BigInt p_count(int delta, int gamma, int n);
BigInt l_delta(int delta, int gamma, int n, int i);

// Same values computed without any memo, L taken literally as a sum over
// enumerated compositions. Exponential; meant for cross-checks.
BigInt p_count_uncached(int delta, int gamma, int n);

struct PTable {
  IntRange deltas;
  IntRange ns;
  int gamma = 0;
  std::vector<std::vector<BigInt>> cells;  // cells[delta - deltas.lo][n - ns.lo]
};

PTable p_table(IntRange deltas, IntRange ns, int gamma);

// [P(1), ..., P(n_max)], the coefficients of sum_n P(n) x^n.
std::vector<BigInt> series_coefficients(int delta, int gamma, int n_max);

struct RaneyDecomposition {
  BigInt direct;      // C_{p,r}(k)
  BigInt decomposed;  // sum_l binom(r,l) sum_{H in O^{k-1}_l} prod C_{p,1}(h_j+1)
  bool holds = false;
};

RaneyDecomposition raney_decomposition_check(int p, int r, int k);

struct BoundRow {
  int delta = 0;
  int n = 0;
  BigInt p;
  BigInt raney;  // C_{delta,1}(n+1)
  bool inequality_holds = false;
};

// Compares P(n) against C_{delta,1}(n+1) row by row; never throws on a
// failed inequality, it just flags the row.
std::vector<BoundRow> raney_bound_report(int delta, int gamma, IntRange ns);

struct GrowthRow {
  int n = 0;
  BigInt p;
  std::optional<double> ratio;  // P(n)/P(n-1), absent for n = 1
  double nth_root = 0.0;        // P(n)^(1/n)
};

std::vector<GrowthRow> growth_report(int delta, int gamma, int n_max);

// Decimal rendering with `digits` significant figures, e.g. "4.16E+08".
std::string to_scientific(const BigInt& value, int digits = 3);

}  // namespace sweepcover

#include "sweepcover/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "sweepcover/corpus.hpp"
#include "sweepcover/count.hpp"
#include "sweepcover/cover.hpp"
#include "sweepcover/enumerate.hpp"
#include "sweepcover/error.hpp"
#include "sweepcover/tree.hpp"

namespace sweepcover::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

struct Options {
  std::string tree_path;
  std::string cover_path;
  std::string out_path;
  Format format = Format::Text;
  std::optional<int> n;
  std::optional<int> n_max;
  std::optional<std::string> n_range;
  std::optional<int> delta;
  std::optional<std::string> delta_range;
  int gamma = 0;
  std::optional<int> star_levels;
  int max_nodes = 7;
  int random_trees = 100;
  std::uint64_t seed = 20201013;
};

std::string str(const BigInt& v) { return v.str(); }

// Space-aligned columns, right-justified.
std::string text_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << std::setw(static_cast<int>(width[i])) << row[i];
    }
    out << "\n";
  }
  return out.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      out += row[i];
    }
    out += "\n";
  }
  return out;
}

std::string render_rows(Format format, const std::vector<std::vector<std::string>>& rows) {
  return format == Format::Csv ? csv(rows) : text_table(rows);
}

std::string fixed(double v, int precision = 6) {
  std::ostringstream s;
  s << std::setprecision(precision) << v;
  return s.str();
}

int require(const std::optional<int>& value, const char* flag) {
  if (!value) throw Error(Errc::InvalidParams, std::string("missing ") + flag);
  return *value;
}

IntRange delta_range(const Options& o) {
  if (o.delta_range) return parse_range(*o.delta_range);
  if (o.delta) return {*o.delta, *o.delta};
  throw Error(Errc::InvalidParams, "missing --delta or --delta-range");
}

IntRange n_range(const Options& o) {
  if (o.n_range) return parse_range(*o.n_range);
  if (o.n_max) return {1, *o.n_max};
  if (o.n) return {*o.n, *o.n};
  throw Error(Errc::InvalidParams, "missing --n-range, --n-max or --n");
}

std::string cover_text(const SweepCover& cover) {
  std::string s = "[";
  for (std::size_t i = 0; i < cover.blocks().size(); ++i) {
    if (i) s += ",";
    s += "[";
    const auto& b = cover.blocks()[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) s += ",";
      s += b[j];
    }
    s += "]";
  }
  return s + "]";
}

std::string cmd_enumerate(const Options& o) {
  if (o.tree_path.empty()) throw Error(Errc::InvalidParams, "missing --tree");
  const int n = require(o.n, "--n");
  if (n < 1) throw Error(Errc::InvalidN, "--n must be >= 1");
  Tree tree = read_tree_file(o.tree_path);
  CoverSet covers = find_sweep_covers(tree, n);
  std::vector<SweepCover> listing(covers.begin(), covers.end());

  switch (o.format) {
    case Format::Json: {
      json j{{"n", n}, {"count", listing.size()}, {"covers", json::array()}};
      for (const auto& c : listing) j["covers"].push_back(c.blocks());
      return j.dump() + "\n";
    }
    case Format::Csv: {
      std::vector<std::vector<std::string>> rows{{"cover", "set", "node"}};
      for (std::size_t c = 0; c < listing.size(); ++c) {
        for (std::size_t s = 0; s < listing[c].size(); ++s) {
          for (const auto& v : listing[c].blocks()[s]) {
            rows.push_back({std::to_string(c), std::to_string(s), v});
          }
        }
      }
      return csv(rows);
    }
    case Format::Text: {
      std::string out;
      for (const auto& c : listing) out += cover_text(c) + "\n";
      return out;
    }
  }
  return {};
}

std::string cmd_validate(const Options& o) {
  if (o.tree_path.empty() || o.cover_path.empty()) {
    throw Error(Errc::InvalidParams, "validate needs --tree and --cover");
  }
  Tree tree = read_tree_file(o.tree_path);
  std::ifstream in(o.cover_path);
  if (!in) throw Error(Errc::EmptyDocument, "cannot read '" + o.cover_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  SweepCover cover = cover_from_json(buf.str());
  CoverReport report = validate(tree, cover);

  std::vector<std::string> names;
  for (auto c : report.violations) names.emplace_back(to_string(c));
  switch (o.format) {
    case Format::Json: {
      json j{{"valid", report.valid}, {"violations", names}, {"witness", nullptr}};
      if (report.witness) j["witness"] = *report.witness;
      return j.dump() + "\n";
    }
    case Format::Csv: {
      std::string joined;
      for (const auto& n : names) joined += (joined.empty() ? "" : ";") + n;
      return csv({{"valid", "violations"}, {report.valid ? "true" : "false", joined}});
    }
    case Format::Text: {
      if (report.valid) return "valid\n";
      std::string out = "invalid:";
      for (const auto& n : names) out += " " + n;
      if (report.witness) {
        out += " (witness:";
        for (const auto& w : *report.witness) out += " " + w;
        out += ")";
      }
      return out + "\n";
    }
  }
  return {};
}

std::string cmd_count(const Options& o) {
  const int delta = require(o.delta, "--delta");
  const int n = require(o.n, "--n");
  BigInt value = p_count(delta, o.gamma, n);
  switch (o.format) {
    case Format::Json:
      return json{{"delta", delta}, {"gamma", o.gamma}, {"n", n}, {"value", str(value)}}.dump() +
             "\n";
    case Format::Csv:
      return csv({{"delta", "gamma", "n", "value"},
                  {std::to_string(delta), std::to_string(o.gamma), std::to_string(n), str(value)}});
    case Format::Text:
      return str(value) + "\n";
  }
  return {};
}

std::string cmd_table(const Options& o) {
  PTable table = p_table(delta_range(o), n_range(o), o.gamma);
  if (o.format == Format::Json) {
    json j{{"gamma", table.gamma}, {"rows", json::array()}};
    json ns = json::array();
    for (int n = table.ns.lo; n <= table.ns.hi; ++n) ns.push_back(n);
    j["n"] = ns;
    for (int d = table.deltas.lo; d <= table.deltas.hi; ++d) {
      json values = json::array();
      for (const auto& v : table.cells[static_cast<std::size_t>(d - table.deltas.lo)]) {
        values.push_back(str(v));
      }
      j["rows"].push_back({{"delta", d}, {"values", values}});
    }
    return j.dump() + "\n";
  }
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{o.format == Format::Csv ? "delta" : "delta\\n"};
  for (int n = table.ns.lo; n <= table.ns.hi; ++n) header.push_back(std::to_string(n));
  rows.push_back(std::move(header));
  for (int d = table.deltas.lo; d <= table.deltas.hi; ++d) {
    std::vector<std::string> row{std::to_string(d)};
    for (const auto& v : table.cells[static_cast<std::size_t>(d - table.deltas.lo)]) {
      row.push_back(str(v));
    }
    rows.push_back(std::move(row));
  }
  return render_rows(o.format, rows);
}

// The Catalan-style index shift o with P(n) = C_{delta,1}(n + o) on every
// row, if one in [-3, 3] exists.
std::optional<int> raney_offset(const std::vector<BoundRow>& rows) {
  for (int offset = -3; offset <= 3; ++offset) {
    bool all = !rows.empty();
    for (const auto& row : rows) {
      if (row.n + offset < 0 || row.p != raney({row.delta, 1, row.n + offset})) {
        all = false;
        break;
      }
    }
    if (all) return offset;
  }
  return std::nullopt;
}

std::string cmd_bound_report(const Options& o) {
  const IntRange deltas = delta_range(o);
  const IntRange ns = n_range(o);
  std::vector<BoundRow> all;
  std::vector<std::string> notes;
  for (int d = deltas.lo; d <= deltas.hi; ++d) {
    auto rows = raney_bound_report(d, o.gamma, ns);
    if (auto offset = raney_offset(rows)) {
      notes.push_back("delta=" + std::to_string(d) + ": P(n) = C_{" + std::to_string(d) +
                      ",1}(n" + (*offset >= 0 ? "+" : "") + std::to_string(*offset) +
                      ") on every row");
    }
    all.insert(all.end(), rows.begin(), rows.end());
  }

  if (o.format == Format::Json) {
    json j{{"gamma", o.gamma}, {"rows", json::array()}, {"notes", notes}};
    for (const auto& r : all) {
      j["rows"].push_back({{"delta", r.delta},
                           {"n", r.n},
                           {"p", str(r.p)},
                           {"raney", str(r.raney)},
                           {"inequality_holds", r.inequality_holds}});
    }
    return j.dump() + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"delta", "n", "P", "raney", "inequality_holds"}};
  for (const auto& r : all) {
    rows.push_back({std::to_string(r.delta), std::to_string(r.n), str(r.p), str(r.raney),
                    r.inequality_holds ? "true" : "false"});
  }
  std::string out = render_rows(o.format, rows);
  if (o.format == Format::Text) {
    for (const auto& note : notes) out += "# " + note + "\n";
  }
  return out;
}

std::string cmd_growth_report(const Options& o) {
  const int delta = require(o.delta, "--delta");
  const int n_max = require(o.n_max, "--n-max");
  auto rows = growth_report(delta, o.gamma, n_max);
  if (o.format == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"p", str(r.p)},
                   {"ratio", r.ratio ? json(*r.ratio) : json(nullptr)},
                   {"nth_root", r.nth_root}});
    }
    return j.dump() + "\n";
  }
  std::vector<std::vector<std::string>> table{{"n", "P", "ratio", "nth_root"}};
  for (const auto& r : rows) {
    table.push_back({std::to_string(r.n), str(r.p), r.ratio ? fixed(*r.ratio) : "",
                     fixed(r.nth_root)});
  }
  return render_rows(o.format, table);
}

std::string cmd_discrepancy(const Options& o) {
  const int delta = require(o.delta, "--delta");
  const int n_max = require(o.n_max, "--n-max");
  if (n_max < 1) throw Error(Errc::InvalidParams, "--n-max must be >= 1");
  if (o.star_levels && *o.star_levels < 1) {
    throw Error(Errc::InvalidParams, "--star-levels must be >= 1");
  }
  struct Row {
    int n;
    int levels;
    BigInt recurrence;
    std::size_t algorithm;
    std::size_t brute;
  };
  std::vector<Row> rows;
  for (int n = 1; n <= n_max; ++n) {
    const int levels = o.star_levels.value_or(n + 1);
    Tree tree = build_ild_truncated({delta, o.gamma, levels});
    rows.push_back({n, levels, p_count(delta, o.gamma, n), find_sweep_covers(tree, n).size(),
                    brute_force_covers(tree, n).size()});
  }
  if (o.format == Format::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"n", r.n},
                   {"star_levels", r.levels},
                   {"recurrence_count", str(r.recurrence)},
                   {"algorithm_count", r.algorithm},
                   {"truncated_brute_force_count", r.brute}});
    }
    return j.dump() + "\n";
  }
  std::vector<std::vector<std::string>> table{
      {"n", "star_levels", "recurrence_count", "algorithm_count", "truncated_brute_force_count"}};
  for (const auto& r : rows) {
    table.push_back({std::to_string(r.n), std::to_string(r.levels), str(r.recurrence),
                     std::to_string(r.algorithm), std::to_string(r.brute)});
  }
  return render_rows(o.format, table);
}

std::string cmd_oracle_check(const Options& o, int& status) {
  OracleOptions opts;
  opts.max_nodes = o.max_nodes;
  opts.n_max = require(o.n_max, "--n-max");
  opts.random_trees = o.random_trees;
  opts.seed = o.seed;
  OracleSummary summary = oracle_check(opts);
  status = summary.ok() ? kOk : kOracleMismatch;

  if (o.format == Format::Json) {
    json j{{"trees", summary.trees}, {"pairs", summary.pairs}, {"match", summary.ok()}};
    if (summary.first_mismatch) {
      const auto& m = *summary.first_mismatch;
      j["first_mismatch"] = {{"tree", m.tree},
                             {"n", m.n},
                             {"algorithm_count", m.algorithm_count},
                             {"oracle_count", m.oracle_count}};
    }
    return j.dump() + "\n";
  }
  if (summary.ok()) {
    return "all " + std::to_string(summary.pairs) + " tree/size pairs match (" +
           std::to_string(summary.trees) + " trees)\n";
  }
  const auto& m = *summary.first_mismatch;
  return "mismatch at n=" + std::to_string(m.n) + ": algorithm " +
         std::to_string(m.algorithm_count) + " covers, oracle " + std::to_string(m.oracle_count) +
         "\n" + m.tree;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sweep-cover enumeration and counting", "sweepcover"};
  app.require_subcommand(1);
  Options o;

  const std::map<std::string, Format> formats{
      {"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
           "--format", [&](const std::string& name) { o.format = formats.at(name); },
           "output format (default text)")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", o.out_path, "write results here instead of stdout");
  };

  auto* enumerate = app.add_subcommand("enumerate", "list all sweep-covers of size n");
  enumerate->add_option("--tree", o.tree_path, "edge-list file")->required();
  enumerate->add_option("--n", o.n, "cover size")->required();
  common(enumerate);

  auto* validate_cmd = app.add_subcommand("validate", "check a cover against a tree");
  validate_cmd->add_option("--tree", o.tree_path, "edge-list file")->required();
  validate_cmd->add_option("--cover", o.cover_path, "JSON array of arrays of labels")->required();
  common(validate_cmd);

  auto* count = app.add_subcommand("count", "P(n) for a Delta-ary tree");
  count->add_option("--delta", o.delta, "out-degree of each star")->required();
  count->add_option("--gamma", o.gamma, "path length between stars (default 0)");
  count->add_option("--n", o.n, "cover size")->required();
  common(count);

  auto* table = app.add_subcommand("table", "grid of P values");
  auto* table_delta = table->add_option("--delta", o.delta, "out-degree of each star");
  table->add_option("--delta-range", o.delta_range, "A..B")->excludes(table_delta);
  table->add_option("--n-range", o.n_range, "A..B");
  table->add_option("--n-max", o.n_max, "shorthand for --n-range 1..N");
  table->add_option("--gamma", o.gamma, "path length between stars (default 0)");
  common(table);

  auto* bound = app.add_subcommand("bound-report", "P(n) against the Raney numbers");
  auto* bound_delta = bound->add_option("--delta", o.delta, "out-degree of each star");
  bound->add_option("--delta-range", o.delta_range, "A..B")->excludes(bound_delta);
  bound->add_option("--n-range", o.n_range, "A..B");
  bound->add_option("--n-max", o.n_max, "largest cover size");
  bound->add_option("--gamma", o.gamma, "path length between stars (default 0)");
  common(bound);

  auto* growth = app.add_subcommand("growth-report", "growth diagnostics of P(n)");
  growth->add_option("--delta", o.delta, "out-degree of each star")->required();
  growth->add_option("--gamma", o.gamma, "path length between stars (default 0)");
  growth->add_option("--n-max", o.n_max, "largest cover size")->required();
  common(growth);

  auto* discrepancy =
      app.add_subcommand("discrepancy", "recurrence against brute force on truncated trees");
  discrepancy->add_option("--delta", o.delta, "out-degree of each star")->required();
  discrepancy->add_option("--gamma", o.gamma, "path length between stars (default 0)");
  discrepancy->add_option("--n-max", o.n_max, "largest cover size")->required();
  discrepancy->add_option("--star-levels", o.star_levels, "default n+1 per row");
  common(discrepancy);

  auto* oracle = app.add_subcommand("oracle-check", "algorithm against brute force on small trees");
  oracle->add_option("--max-nodes", o.max_nodes, "largest tree size")->capture_default_str();
  oracle->add_option("--n-max", o.n_max, "largest cover size")->required();
  oracle->add_option("--random-trees", o.random_trees, "extra randomly labeled trees")->capture_default_str();
  oracle->add_option("--seed", o.seed, "seed for the random trees")->capture_default_str();
  common(oracle);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadParameters;
  }

  int status = kOk;
  std::string result;
  try {
    if (enumerate->parsed()) result = cmd_enumerate(o);
    else if (validate_cmd->parsed()) result = cmd_validate(o);
    else if (count->parsed()) result = cmd_count(o);
    else if (table->parsed()) result = cmd_table(o);
    else if (bound->parsed()) result = cmd_bound_report(o);
    else if (growth->parsed()) result = cmd_growth_report(o);
    else if (discrepancy->parsed()) result = cmd_discrepancy(o);
    else if (oracle->parsed()) result = cmd_oracle_check(o, status);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    const bool input_problem = e.is_parse_error() || e.code() == Errc::UnknownNode;
    return input_problem ? kParseFailure : kBadParameters;
  }

  if (o.out_path.empty()) {
    out << result;
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kBadParameters;
    }
    file << result;
  }
  return status;
}

}  // namespace sweepcover::cli

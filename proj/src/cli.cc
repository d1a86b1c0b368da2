#include "blowup/cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "blowup/blowup.h"
#include "blowup/c4_count.h"
#include "blowup/edge_list.h"
#include "blowup/formulas.h"
#include "blowup/report.h"

namespace blowup {
namespace {

using nlohmann::json;

struct Options {
  std::string family;  // empty: c4, or custom when --input is given
  std::string input;
  std::optional<unsigned> level;
  unsigned min_level = 0;
  std::optional<unsigned> max_level;
  std::string method = "both";
  std::string variant = "both";
  std::string format = "text";
  std::string out;
  unsigned workers = 1;
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t subset_cap = kDefaultSubsetCap;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BaseFamily resolve_family(const Options& o) {
  if (o.family.empty()) return o.input.empty() ? BaseFamily::kC4 : BaseFamily::kCustom;
  const auto f = parse_family(o.family);
  if (!f) throw UsageError("unknown family '" + o.family + "'");
  if (*f != BaseFamily::kCustom && !o.input.empty()) {
    throw UsageError("--input is only valid with --family custom");
  }
  if (*f == BaseFamily::kCustom && o.input.empty()) {
    throw UsageError("--family custom requires --input");
  }
  return *f;
}

BaseFamily resolve_formula_family(const Options& o) {
  const BaseFamily f = resolve_family(o);
  if (f == BaseFamily::kCustom) throw UsageError("formulas exist only for c4 and theta222");
  return f;
}

BlowupSpec make_spec(BaseFamily family, const Options& o, unsigned level) {
  if (family == BaseFamily::kCustom) return BlowupSpec::custom(load_edge_list(o.input), level);
  return BlowupSpec::of(family, level);
}

std::pair<unsigned, unsigned> level_range(const Options& o) {
  unsigned lo = o.min_level;
  unsigned hi = o.max_level.value_or(lo);
  if (o.level) lo = hi = *o.level;
  if (lo > hi) throw UsageError("--min-level exceeds --max-level");
  if (hi > kMaxFormulaLevel) {
    throw UsageError("level " + std::to_string(hi) + " exceeds the formula cap of " +
                     std::to_string(kMaxFormulaLevel));
  }
  return {lo, hi};
}

MethodSet parse_methods(const std::string& m) {
  if (m == "enum") return MethodSet::kEnumeration;
  if (m == "diagonal") return MethodSet::kDiagonal;
  return MethodSet::kBoth;
}

std::string seconds(std::chrono::nanoseconds ns) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(ns).count() << " s";
  return s.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
  if (!f.flush()) throw std::runtime_error("write failed for " + path);
}

// Right-aligned plain-text table, or CSV.
class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void print_text(std::ostream& out) const {
    std::vector<std::size_t> width(header_.size());
    for (std::size_t c = 0; c < header_.size(); ++c) {
      width[c] = header_[c].size();
      for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
    }
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) {
        out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << r[c];
      }
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void print_csv(std::ostream& out) const {
    auto line = [&](const std::vector<std::string>& r) {
      for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "," : "") << r[c];
      out << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

  void print(std::ostream& out, const std::string& format) const {
    if (format == "csv") {
      print_csv(out);
    } else {
      print_text(out);
    }
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

template <typename T>
std::string show(const Measured<T>& m) {
  return m.value ? to_string(*m.value) : m.status;
}

// ---- subcommands ----

int cmd_generate(const Options& o, std::ostream& out) {
  const BaseFamily family = resolve_family(o);
  if (!o.level) throw UsageError("generate requires --level");
  if (o.out.empty()) throw UsageError("generate requires --out");
  const Graph g = nested_blowup(make_spec(family, o, *o.level), o.vertex_cap);
  save_edge_list(g, o.out);
  out << "wrote " << o.out << ": " << g.order() << " vertices, " << g.edge_count() << " edges\n";
  return kExitOk;
}

int cmd_count(const Options& o, std::ostream& out) {
  const BaseFamily family = resolve_family(o);
  Graph g;
  if (family == BaseFamily::kCustom && !o.level) {
    g = load_edge_list(o.input);
  } else {
    g = nested_blowup(make_spec(family, o, o.level.value_or(0)), o.vertex_cap);
  }

  const CountOptions options{o.subset_cap, o.workers};
  json record = {{"graph",
                  {{"vertices", g.order()}, {"edges", g.edge_count()}, {"non_edges", g.non_edge_count()}}},
                 {"counts", json::object()}};
  std::ostringstream text;
  text << "graph: " << g.order() << " vertices, " << g.edge_count() << " edges, "
       << g.non_edge_count() << " non-edges\n";

  if (o.method == "both") {
    const AgreedCount agreed = count_both_and_check(g, options);
    record["counts"]["enum"] = {{"value", agreed.value.str()},
                                {"elapsed_ns", agreed.enumeration_elapsed.count()}};
    record["counts"]["diagonal"] = {{"value", agreed.value.str()},
                                    {"elapsed_ns", agreed.diagonal_elapsed.count()}};
    record["value"] = agreed.value.str();
    record["methods_agree"] = true;
    text << "enum: " << agreed.value << " (" << seconds(agreed.enumeration_elapsed) << ")\n"
         << "diagonal: " << agreed.value << " (" << seconds(agreed.diagonal_elapsed) << ")\n"
         << "methods agree: " << agreed.value << '\n';
  } else {
    const CountMethod method = o.method == "enum" ? CountMethod::kEnumeration : CountMethod::kDiagonal;
    const CountResult r = count_induced_c4(g, method, options);
    record["counts"][std::string(method_name(method))] = {{"value", r.value.str()},
                                                          {"elapsed_ns", r.elapsed.count()}};
    record["value"] = r.value.str();
    text << method_name(method) << ": " << r.value << " (" << seconds(r.elapsed) << ")\n";
  }

  if (!o.out.empty()) write_file(o.out, record.dump(2) + "\n");
  if (o.format == "json" && o.out.empty()) {
    out << record.dump(2) << '\n';
  } else {
    out << text.str();
  }
  return kExitOk;
}

int cmd_formula(const Options& o, std::ostream& out) {
  const BaseFamily family = resolve_formula_family(o);
  const auto [lo, hi] = level_range(o);
  const bool stated = o.variant != "derived";
  const bool derived = o.variant != "stated";

  std::vector<std::string> header = {"N", "m_c", "T_recurrence", "Q", "R", "S"};
  if (stated) header.insert(header.end(), {"T_closed_stated", "stated_integer", "stated_matches"});
  if (derived) header.insert(header.end(), {"T_closed_derived", "derived_integer", "derived_matches"});
  if (stated && derived) header.push_back("stated_equals_derived");
  Table table(header);

  for (unsigned n = lo; n <= hi; ++n) {
    const ExactInt t = *recurrence_T(family, n);
    const PartialSums sums = *partial_sums(family, n);
    std::vector<std::string> row = {std::to_string(n),        nonedges_formula(family, n)->str(),
                                    t.str(),                  sums.q.summation.str(),
                                    sums.r.summation.str(),   sums.s.summation.str()};
    const ExactRational s = *closed_T(family, n, FormulaVariant::kStatedTheorem);
    const ExactRational d = *closed_T(family, n, FormulaVariant::kDerivedProof);
    auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
    if (stated) row.insert(row.end(), {to_string(s), yes_no(is_integer(s)), yes_no(s == t)});
    if (derived) row.insert(row.end(), {to_string(d), yes_no(is_integer(d)), yes_no(d == t)});
    if (stated && derived) row.push_back(yes_no(s == d));
    table.add(std::move(row));
  }
  table.print(out, o.format);
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const BaseFamily family = resolve_formula_family(o);
  Options range = o;
  range.min_level = 0;
  if (!range.max_level && range.level) range.max_level = range.level;
  range.level.reset();
  const auto [lo, hi] = level_range(range);

  Table table({"N", "n_N", "edges", "m_c", "T"});
  const std::uint64_t base = family == BaseFamily::kC4 ? 4 : 5;
  for (unsigned n = lo; n <= hi; ++n) {
    table.add({std::to_string(n), ipow(base, n + 1).str(), edges_formula(family, n)->str(),
               nonedges_formula(family, n)->str(), recurrence_T(family, n)->str()});
  }
  table.print(out, o.format == "text" ? "csv" : o.format);
  return kExitOk;
}

void print_summary(const VerificationReport& report, std::ostream& out) {
  out << "family: " << family_name(report.family) << '\n';
  Table table({"N", "vertices", "non_edges_graph", "non_edges_formula", "T_enum", "T_diagonal",
               "T_recurrence", "T_closed_derived", "T_closed_stated", "status"});
  for (const auto& l : report.levels) {
    bool ok = true;
    for (const auto& [name, flag] : l.match_flags) {
      if (flag.status == MatchStatus::kMismatch && name != kStatedVsRecurrence) ok = false;
    }
    table.add({std::to_string(l.N), l.vertices.str(), show(l.non_edges_graph), show(l.non_edges_formula),
               show(l.T_enum), show(l.T_diagonal), show(l.T_recurrence), show(l.T_closed_derived),
               show(l.T_closed_stated), ok ? "ok" : "MISMATCH"});
  }
  table.print_text(out);
  for (const auto& l : report.levels) {
    for (const auto& [name, flag] : l.match_flags) {
      if (flag.status == MatchStatus::kMismatch && name != kStatedVsRecurrence) {
        out << "mismatch at N=" << l.N << ": " << name << '\n';
      }
    }
  }
  for (const auto& f : report.findings) out << "finding: " << f.message << '\n';
  out << "result: " << (report.passed() ? "PASS" : "FAIL") << " (" << report.findings.size()
      << " stated-theorem finding" << (report.findings.size() == 1 ? "" : "s") << ")\n";
}

int cmd_verify(const Options& o, std::ostream& out) {
  RunConfig config;
  config.family = resolve_family(o);
  if (config.family == BaseFamily::kCustom) config.custom_base = load_edge_list(o.input);
  config.max_level = o.max_level.value_or(o.level.value_or(2));
  if (config.max_level > kMaxFormulaLevel) throw UsageError("--max-level exceeds the formula cap");
  config.methods = parse_methods(o.method);
  config.vertex_cap = o.vertex_cap;
  config.subset_cap = o.subset_cap;
  config.workers = o.workers;

  const VerificationReport report = run_verification(config);
  const std::string json_text = to_json(report).dump(2) + "\n";
  if (!o.out.empty()) write_file(o.out, json_text);
  if (o.format == "json" && o.out.empty()) {
    out << json_text;
  } else {
    print_summary(report, out);
  }
  return report.passed() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nested blow-up graphs and induced 4-cycle counting", "blowup-c4"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> families = {"c4", "theta222", "custom"};
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "Base family")->check(CLI::IsMember(families));
    sub->add_option("--input", o.input, "Edge-list file (custom family / raw graph)");
  };
  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--vertex-cap", o.vertex_cap, "Maximum vertices to build")->check(CLI::PositiveNumber);
  };
  auto add_counting = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "Counting method")
        ->check(CLI::IsMember({"enum", "diagonal", "both"}));
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--subset-cap", o.subset_cap, "Maximum 4-subsets to enumerate")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember(std::move(allowed)));
  };

  auto* generate = app.add_subcommand("generate", "Write a nested blow-up as an edge list");
  add_family(generate);
  add_caps(generate);
  generate->add_option("--level", o.level, "Blow-up level N");
  generate->add_option("--out", o.out, "Output path");

  auto* count = app.add_subcommand("count", "Count induced 4-cycles");
  add_family(count);
  add_caps(count);
  add_counting(count);
  add_format(count, {"text", "json"});
  count->add_option("--level", o.level, "Blow-up level N");
  count->add_option("--out", o.out, "JSON record path");

  auto* formula = app.add_subcommand("formula", "Tabulate exact formulas");
  add_family(formula);
  add_format(formula, {"text", "csv"});
  formula->add_option("--level", o.level, "Single level");
  formula->add_option("--min-level", o.min_level, "First level");
  formula->add_option("--max-level", o.max_level, "Last level");
  formula->add_option("--variant", o.variant, "Closed-form variant")
      ->check(CLI::IsMember({"stated", "derived", "both"}));

  auto* verify = app.add_subcommand("verify", "Cross-check formulas against graph counts");
  add_family(verify);
  add_caps(verify);
  add_counting(verify);
  add_format(verify, {"text", "json"});
  verify->add_option("--max-level", o.max_level, "Last level (default 2)");
  verify->add_option("--level", o.level, "Alias for --max-level");
  verify->add_option("--out", o.out, "JSON report path");

  auto* sequence = app.add_subcommand("sequence", "Formula sequence table (N, n_N, |E|, m_c, T)");
  add_family(sequence);
  add_format(sequence, {"text", "csv"});
  sequence->add_option("--max-level", o.max_level, "Last level");
  sequence->add_option("--level", o.level, "Alias for --max-level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*generate) return cmd_generate(o, out);
    if (*count) return cmd_count(o, out);
    if (*formula) return cmd_formula(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*sequence) return cmd_sequence(o, out);
  } catch (const CounterDisagreement& e) {
    err << "error: " << e.what() << '\n';
    return kExitCounterDisagreement;
  } catch (const FormulaInconsistency& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const InexactDivision& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace blowup

#include "blowup/report.h"

#include <ctime>
#include <stdexcept>
#include <utility>

namespace blowup {
namespace {

using Clock = std::chrono::steady_clock;
using nlohmann::json;

constexpr const char* kToolName = "blowup-c4";
constexpr const char* kToolVersion = "0.1.0";

std::chrono::nanoseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start);
}

template <typename A, typename B>
MatchFlag compare(const Measured<A>& a, const Measured<B>& b) {
  if (!a.value) return {MatchStatus::kSkipped, a.status};
  if (!b.value) return {MatchStatus::kSkipped, b.status};
  return {*a.value == *b.value ? MatchStatus::kMatch : MatchStatus::kMismatch, ""};
}

MatchFlag flag_of(bool ok) { return {ok ? MatchStatus::kMatch : MatchStatus::kMismatch, ""}; }

std::string_view methods_name(MethodSet m) {
  switch (m) {
    case MethodSet::kEnumeration:
      return "enum";
    case MethodSet::kDiagonal:
      return "diagonal";
    case MethodSet::kBoth:
      return "both";
  }
  return "both";
}

bool wants(MethodSet set, CountMethod method) {
  if (set == MethodSet::kBoth) return true;
  return (set == MethodSet::kEnumeration) == (method == CountMethod::kEnumeration);
}

// ---- JSON helpers ----

json measured_to_json(const Measured<ExactInt>& m) {
  json j = {{"status", m.status}};
  if (m.value) j["value"] = m.value->str();
  return j;
}

json measured_to_json(const Measured<ExactRational>& m) {
  json j = {{"status", m.status}};
  if (m.value) {
    j["value"] = to_string(*m.value);
    j["is_integer"] = is_integer(*m.value);
  }
  return j;
}

template <typename T, typename Parse>
Measured<T> measured_from_json(const json& j, Parse parse) {
  Measured<T> m;
  m.status = j.at("status").get<std::string>();
  if (j.contains("value")) m.value = parse(j.at("value").get<std::string>());
  return m;
}

Measured<ExactInt> int_from_json(const json& j) {
  return measured_from_json<ExactInt>(j, parse_exact_int);
}

Measured<ExactRational> rational_from_json(const json& j) {
  return measured_from_json<ExactRational>(j, parse_exact_rational);
}

std::string flag_to_string(const MatchFlag& f) {
  switch (f.status) {
    case MatchStatus::kMatch:
      return "match";
    case MatchStatus::kMismatch:
      return "mismatch";
    case MatchStatus::kSkipped:
      return f.detail.empty() ? "skipped" : f.detail;
  }
  return "skipped";
}

MatchFlag flag_from_string(const std::string& s) {
  if (s == "match") return {MatchStatus::kMatch, ""};
  if (s == "mismatch") return {MatchStatus::kMismatch, ""};
  if (s.rfind("skipped", 0) == 0) return {MatchStatus::kSkipped, s == "skipped" ? "" : s};
  throw std::invalid_argument("unknown match flag '" + s + "'");
}

json breakdown_to_json(const std::optional<TermBreakdown>& b) {
  if (!b) return {{"status", "skipped: no formula"}};
  return {{"status", "computed"},
          {"copies_term", b->copies_term.str()},
          {"all_blob_term", b->all_blob_term.str()},
          {"one_nonedge_term", b->one_nonedge_term.str()},
          {"two_nonedge_term", b->two_nonedge_term.str()}};
}

std::optional<TermBreakdown> breakdown_from_json(const json& j) {
  if (j.at("status").get<std::string>() != "computed") return std::nullopt;
  auto field = [&](const char* name) { return parse_exact_int(j.at(name).get<std::string>()); };
  return TermBreakdown{field("copies_term"), field("all_blob_term"), field("one_nonedge_term"),
                       field("two_nonedge_term")};
}

json level_to_json(const LevelRecord& r) {
  json flags = json::object();
  for (const auto& [name, flag] : r.match_flags) flags[name] = flag_to_string(flag);
  return {
      {"N", r.N},
      {"vertices", r.vertices.str()},
      {"edges", measured_to_json(r.edges)},
      {"non_edges_graph", measured_to_json(r.non_edges_graph)},
      {"non_edges_formula", measured_to_json(r.non_edges_formula)},
      {"T_enum", measured_to_json(r.T_enum)},
      {"T_diagonal", measured_to_json(r.T_diagonal)},
      {"T_recurrence", measured_to_json(r.T_recurrence)},
      {"T_closed_stated", measured_to_json(r.T_closed_stated)},
      {"T_closed_derived", measured_to_json(r.T_closed_derived)},
      {"breakdown", breakdown_to_json(r.breakdown)},
      {"match_flags", flags},
      {"timings",
       {{"build_ns", r.timings.build.count()},
        {"enum_ns", r.timings.enumeration.count()},
        {"diagonal_ns", r.timings.diagonal.count()},
        {"formulas_ns", r.timings.formulas.count()}}},
  };
}

LevelRecord level_from_json(const json& j) {
  LevelRecord r;
  r.N = j.at("N").get<unsigned>();
  r.vertices = parse_exact_int(j.at("vertices").get<std::string>());
  r.edges = int_from_json(j.at("edges"));
  r.non_edges_graph = int_from_json(j.at("non_edges_graph"));
  r.non_edges_formula = int_from_json(j.at("non_edges_formula"));
  r.T_enum = int_from_json(j.at("T_enum"));
  r.T_diagonal = int_from_json(j.at("T_diagonal"));
  r.T_recurrence = int_from_json(j.at("T_recurrence"));
  r.T_closed_stated = rational_from_json(j.at("T_closed_stated"));
  r.T_closed_derived = rational_from_json(j.at("T_closed_derived"));
  r.breakdown = breakdown_from_json(j.at("breakdown"));
  for (const auto& [name, value] : j.at("match_flags").items()) {
    r.match_flags[name] = flag_from_string(value.get<std::string>());
  }
  const json& t = j.at("timings");
  r.timings.build = std::chrono::nanoseconds(t.at("build_ns").get<std::int64_t>());
  r.timings.enumeration = std::chrono::nanoseconds(t.at("enum_ns").get<std::int64_t>());
  r.timings.diagonal = std::chrono::nanoseconds(t.at("diagonal_ns").get<std::int64_t>());
  r.timings.formulas = std::chrono::nanoseconds(t.at("formulas_ns").get<std::int64_t>());
  return r;
}

LevelRecord verify_level(const RunConfig& config, unsigned level) {
  const BlowupSpec spec = config.family == BaseFamily::kCustom
                              ? BlowupSpec::custom(*config.custom_base, level)
                              : BlowupSpec::of(config.family, level);
  LevelRecord rec;
  rec.N = level;
  rec.vertices = ipow(spec.base_order(), level + 1);

  // Formula side.
  auto formula_start = Clock::now();
  const bool has_formulas = config.family != BaseFamily::kCustom;
  const auto no_formula = Measured<ExactInt>::skipped("no formula");
  std::optional<PartialSums> sums;
  if (has_formulas) {
    rec.non_edges_formula = Measured<ExactInt>::computed(*nonedges_formula(config.family, level));
    rec.T_recurrence = Measured<ExactInt>::computed(*recurrence_T(config.family, level));
    rec.T_closed_stated = Measured<ExactRational>::computed(
        *closed_T(config.family, level, FormulaVariant::kStatedTheorem));
    rec.T_closed_derived = Measured<ExactRational>::computed(
        *closed_T(config.family, level, FormulaVariant::kDerivedProof));
    rec.breakdown = recurrence_breakdown(config.family, level);
    sums = partial_sums(config.family, level);
  } else {
    rec.non_edges_formula = no_formula;
    rec.T_recurrence = no_formula;
    rec.T_closed_stated = Measured<ExactRational>::skipped("no formula");
    rec.T_closed_derived = Measured<ExactRational>::skipped("no formula");
  }
  rec.timings.formulas = since(formula_start);
  const Measured<ExactInt> edges_from_formula =
      has_formulas ? Measured<ExactInt>::computed(*edges_formula(config.family, level)) : no_formula;

  // Graph side.
  const auto total = spec.total_order();
  std::optional<Graph> graph;
  if (total && *total <= config.vertex_cap) {
    const auto build_start = Clock::now();
    graph = nested_blowup(spec, config.vertex_cap);
    rec.timings.build = since(build_start);
    rec.edges = Measured<ExactInt>::computed(graph->edge_count());
    rec.non_edges_graph = Measured<ExactInt>::computed(graph->non_edge_count());
  } else {
    rec.edges = Measured<ExactInt>::skipped("cap");
    rec.non_edges_graph = Measured<ExactInt>::skipped("cap");
  }

  const CountOptions options{config.subset_cap, config.workers};
  if (!wants(config.methods, CountMethod::kEnumeration)) {
    rec.T_enum = Measured<ExactInt>::skipped("not requested");
  } else if (!graph || !enumeration_within_cap(*graph, config.subset_cap)) {
    rec.T_enum = Measured<ExactInt>::skipped("cap");
  } else {
    CountResult res = count_induced_c4_enum(*graph, options);
    rec.timings.enumeration = res.elapsed;
    rec.T_enum = Measured<ExactInt>::computed(std::move(res.value));
  }
  if (!wants(config.methods, CountMethod::kDiagonal)) {
    rec.T_diagonal = Measured<ExactInt>::skipped("not requested");
  } else if (!graph) {
    rec.T_diagonal = Measured<ExactInt>::skipped("cap");
  } else {
    CountResult res = count_induced_c4_diagonal(*graph, options);
    rec.timings.diagonal = res.elapsed;
    rec.T_diagonal = Measured<ExactInt>::computed(std::move(res.value));
  }
  if (rec.T_enum.value && rec.T_diagonal.value && *rec.T_enum.value != *rec.T_diagonal.value) {
    throw CounterDisagreement(*rec.T_enum.value, *rec.T_diagonal.value);
  }

  // Comparisons.
  auto& flags = rec.match_flags;
  flags[kNonEdgesFormulaVsGraph] = compare(rec.non_edges_formula, rec.non_edges_graph);
  flags[kEdgesFormulaVsGraph] = compare(edges_from_formula, rec.edges);
  flags[kEnumVsDiagonal] = compare(rec.T_enum, rec.T_diagonal);
  flags[kRecurrenceVsEnum] = compare(rec.T_recurrence, rec.T_enum);
  flags[kRecurrenceVsDiagonal] = compare(rec.T_recurrence, rec.T_diagonal);

  Measured<ExactRational> recurrence_q = Measured<ExactRational>::skipped("no formula");
  if (rec.T_recurrence.value) recurrence_q = Measured<ExactRational>::computed(*rec.T_recurrence.value);
  flags[kDerivedVsRecurrence] = compare(rec.T_closed_derived, recurrence_q);
  flags[kStatedVsRecurrence] = compare(rec.T_closed_stated, recurrence_q);

  const Measured<ExactInt>& oracle = rec.T_diagonal.value ? rec.T_diagonal : rec.T_enum;
  Measured<ExactRational> oracle_q = Measured<ExactRational>::skipped("cap");
  if (oracle.value) oracle_q = Measured<ExactRational>::computed(*oracle.value);
  flags[kDerivedVsOracle] = compare(rec.T_closed_derived, oracle_q);

  if (has_formulas) {
    flags[kBreakdownVsRecurrence] = flag_of(rec.breakdown->total() == *rec.T_recurrence.value);
    flags[kPartialSumsVsClosed] = flag_of(sums->q.equal() && sums->r.equal() && sums->s.equal());
    flags[kPartialSumsVsRecurrence] = flag_of(sums->total() == *rec.T_recurrence.value);
  } else {
    for (const char* name : {kBreakdownVsRecurrence, kPartialSumsVsClosed, kPartialSumsVsRecurrence}) {
      flags[name] = {MatchStatus::kSkipped, "skipped: no formula"};
    }
  }
  return rec;
}

}  // namespace

void RunConfig::validate() const {
  if (vertex_cap == 0 || subset_cap == 0) throw std::invalid_argument("caps must be positive");
  if (workers == 0) throw std::invalid_argument("workers must be positive");
  if (family == BaseFamily::kCustom && !custom_base) {
    throw std::invalid_argument("custom family needs an input graph");
  }
  if (custom_base && custom_base->order() == 0) throw std::invalid_argument("custom base graph is empty");
}

bool operator==(const LevelRecord& a, const LevelRecord& b) {
  return a.N == b.N && a.vertices == b.vertices && a.edges == b.edges &&
         a.non_edges_graph == b.non_edges_graph && a.non_edges_formula == b.non_edges_formula &&
         a.T_enum == b.T_enum && a.T_diagonal == b.T_diagonal && a.T_recurrence == b.T_recurrence &&
         a.T_closed_stated == b.T_closed_stated && a.T_closed_derived == b.T_closed_derived &&
         a.breakdown == b.breakdown && a.match_flags == b.match_flags;
}

bool VerificationReport::passed() const {
  for (const auto& level : levels) {
    for (const auto& [name, flag] : level.match_flags) {
      if (flag.status == MatchStatus::kMismatch && name != kStatedVsRecurrence) return false;
    }
  }
  return true;
}

VerificationReport run_verification(const RunConfig& config) {
  config.validate();
  VerificationReport report;
  report.family = config.family;
  report.config = config_to_json(config);
  for (unsigned level = 0; level <= config.max_level; ++level) {
    LevelRecord rec = verify_level(config, level);
    const MatchFlag& stated = rec.match_flags.at(kStatedVsRecurrence);
    if (stated.status == MatchStatus::kMismatch) {
      Finding f;
      f.kind = "stated_theorem_mismatch";
      f.level = level;
      f.expected = rec.T_recurrence.value->str();
      f.actual = to_string(*rec.T_closed_stated.value);
      f.actual_is_integer = is_integer(*rec.T_closed_stated.value);
      f.message = "stated closed form gives " + f.actual + " at N=" + std::to_string(level) +
                  ", recurrence gives " + f.expected;
      report.findings.push_back(std::move(f));
    }
    report.levels.push_back(std::move(rec));
  }
  report.meta = {kToolName, kToolVersion, toolchain_description(), rfc3339_now()};
  return report;
}

json config_to_json(const RunConfig& config) {
  json j = {
      {"family", std::string(family_name(config.family))},
      {"max_level", config.max_level},
      {"methods", std::string(methods_name(config.methods))},
      {"vertex_cap", config.vertex_cap},
      {"subset_cap", config.subset_cap},
      {"workers", config.workers},
  };
  if (config.custom_base) j["custom_base_order"] = config.custom_base->order();
  return j;
}

json to_json(const VerificationReport& report) {
  json levels = json::array();
  for (const auto& l : report.levels) levels.push_back(level_to_json(l));
  json findings = json::array();
  for (const auto& f : report.findings) {
    findings.push_back({{"kind", f.kind},
                        {"level", f.level},
                        {"expected", f.expected},
                        {"actual", f.actual},
                        {"actual_is_integer", f.actual_is_integer},
                        {"message", f.message}});
  }
  return {
      {"family", std::string(family_name(report.family))},
      {"config", report.config},
      {"levels", levels},
      {"findings", findings},
      {"passed", report.passed()},
      {"meta",
       {{"tool", report.meta.tool},
        {"version", report.meta.version},
        {"toolchain", report.meta.toolchain},
        {"timestamp", report.meta.timestamp}}},
  };
}

VerificationReport report_from_json(const json& j) {
  VerificationReport report;
  const auto family = parse_family(j.at("family").get<std::string>());
  if (!family) throw std::invalid_argument("unknown family in report");
  report.family = *family;
  report.config = j.at("config");
  for (const auto& l : j.at("levels")) report.levels.push_back(level_from_json(l));
  for (const auto& f : j.at("findings")) {
    report.findings.push_back({f.at("kind").get<std::string>(), f.at("level").get<unsigned>(),
                               f.at("expected").get<std::string>(), f.at("actual").get<std::string>(),
                               f.at("actual_is_integer").get<bool>(),
                               f.at("message").get<std::string>()});
  }
  const json& m = j.at("meta");
  report.meta = {m.at("tool").get<std::string>(), m.at("version").get<std::string>(),
                 m.at("toolchain").get<std::string>(), m.at("timestamp").get<std::string>()};
  return report;
}

std::string rfc3339_now() {
  const std::time_t now = std::time(nullptr);
  std::tm utc{};
  gmtime_r(&now, &utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
  return buf;
}

std::string toolchain_description() {
#if defined(__clang__)
  std::string compiler = "clang " __clang_version__;
#elif defined(__GNUC__)
  std::string compiler = "gcc " __VERSION__;
#else
  std::string compiler = "unknown compiler";
#endif
  return compiler + ", C++ " + std::to_string(__cplusplus);
}

}  // namespace blowup

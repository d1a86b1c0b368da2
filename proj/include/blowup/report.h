#ifndef BLOWUP_REPORT_H_
#define BLOWUP_REPORT_H_

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "blowup/blowup.h"
#include "blowup/c4_count.h"
#include "blowup/exact_int.h"
#include "blowup/formulas.h"

namespace blowup {

enum class MethodSet { kEnumeration, kDiagonal, kBoth };

struct RunConfig {
  BaseFamily family = BaseFamily::kC4;
  // Base graph for BaseFamily::kCustom.
  std::optional<Graph> custom_base;
  unsigned max_level = 2;
  MethodSet methods = MethodSet::kBoth;
  std::uint64_t vertex_cap = kDefaultVertexCap;
  std::uint64_t subset_cap = kDefaultSubsetCap;
  unsigned workers = 1;

  // Throws std::invalid_argument when a cap is zero, workers is zero or the
  // custom base is missing.
  void validate() const;
};

// A value that is either computed or deliberately not computed.
template <typename T>
struct Measured {
  std::optional<T> value;
  std::string status = "computed";  // or "skipped: cap", "skipped: not requested", ...

  static Measured computed(T v) { return {std::move(v), "computed"}; }
  static Measured skipped(std::string why) { return {std::nullopt, "skipped: " + std::move(why)}; }

  friend bool operator==(const Measured&, const Measured&) = default;
};

enum class MatchStatus { kMatch, kMismatch, kSkipped };

struct MatchFlag {
  MatchStatus status = MatchStatus::kSkipped;
  std::string detail;  // reason for a skip

  bool matched() const { return status == MatchStatus::kMatch; }
  friend bool operator==(const MatchFlag&, const MatchFlag&) = default;
};

// Comparison names. Only stated_vs_recurrence may mismatch on a passing run.
inline constexpr const char* kNonEdgesFormulaVsGraph = "non_edges_formula_vs_graph";
inline constexpr const char* kEdgesFormulaVsGraph = "edges_formula_vs_graph";
inline constexpr const char* kEnumVsDiagonal = "enum_vs_diagonal";
inline constexpr const char* kRecurrenceVsEnum = "recurrence_vs_enum";
inline constexpr const char* kRecurrenceVsDiagonal = "recurrence_vs_diagonal";
inline constexpr const char* kBreakdownVsRecurrence = "breakdown_vs_recurrence";
inline constexpr const char* kPartialSumsVsClosed = "partial_sums_summation_vs_closed";
inline constexpr const char* kPartialSumsVsRecurrence = "partial_sums_vs_recurrence";
inline constexpr const char* kDerivedVsRecurrence = "derived_vs_recurrence";
inline constexpr const char* kDerivedVsOracle = "derived_vs_oracle";
inline constexpr const char* kStatedVsRecurrence = "stated_vs_recurrence";

struct LevelTimings {
  std::chrono::nanoseconds build{0};
  std::chrono::nanoseconds enumeration{0};
  std::chrono::nanoseconds diagonal{0};
  std::chrono::nanoseconds formulas{0};
};

struct LevelRecord {
  unsigned N = 0;
  ExactInt vertices;
  Measured<ExactInt> edges;
  Measured<ExactInt> non_edges_graph;
  Measured<ExactInt> non_edges_formula;
  Measured<ExactInt> T_enum;
  Measured<ExactInt> T_diagonal;
  Measured<ExactInt> T_recurrence;
  Measured<ExactRational> T_closed_stated;
  Measured<ExactRational> T_closed_derived;
  std::optional<TermBreakdown> breakdown;
  std::map<std::string, MatchFlag> match_flags;
  LevelTimings timings;

  // Timings are excluded.
  friend bool operator==(const LevelRecord& a, const LevelRecord& b);
};

struct Finding {
  std::string kind;  // "stated_theorem_mismatch"
  unsigned level = 0;
  std::string expected;
  std::string actual;
  bool actual_is_integer = true;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ReportMeta {
  std::string tool;
  std::string version;
  std::string toolchain;
  std::string timestamp;  // RFC 3339, UTC

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct VerificationReport {
  BaseFamily family = BaseFamily::kC4;
  nlohmann::json config;
  std::vector<LevelRecord> levels;
  std::vector<Finding> findings;
  ReportMeta meta;

  // True iff every comparison other than stated_vs_recurrence that ran matched.
  bool passed() const;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// Builds each level up to config.max_level, runs the affordable counters and
// evaluates every formula. Throws CounterDisagreement when the two counters
// differ on the same graph.
VerificationReport run_verification(const RunConfig& config);

nlohmann::json config_to_json(const RunConfig& config);
nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

std::string rfc3339_now();
std::string toolchain_description();

}  // namespace blowup

#endif  // BLOWUP_REPORT_H_

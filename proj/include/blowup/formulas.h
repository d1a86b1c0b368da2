#ifndef BLOWUP_FORMULAS_H_
#define BLOWUP_FORMULAS_H_

#include <optional>
#include <stdexcept>
#include <string_view>

#include "blowup/blowup.h"
#include "blowup/exact_int.h"

// Exact counting formulas for nested blow-ups of C4 and Theta(2,2,2).
//
// Notation used throughout: at level N the graph has n^{N+1} vertices
// (n = 4 or 5), m(N) non-edges and T(N) induced 4-cycles. T(N) is built from
// T(N-1) by a four-term recurrence; unrolling it splits T(N) into three
// partial sums Q, R and S, each of which also has a geometric closed form.
namespace blowup {

inline constexpr unsigned kMaxFormulaLevel = 30;

// StatedTheorem: the headline closed form as printed.
// DerivedProof: the closed form obtained at the end of the derivation.
enum class FormulaVariant { kStatedTheorem, kDerivedProof };

std::string_view variant_name(FormulaVariant variant);

// Two evaluation routes of one formula disagree, which means a transcription bug.
class FormulaInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// The summands of one step of the recurrence.
//   C4:    copies = 4 T(N-1), all_blob = (4^N)^4,
//          one_nonedge = 4 m(N-1) (4^N)^2, two_nonedge = 4 m(N-1)^2
//   Theta: copies = 5 T(N-1), all_blob = 3 (5^N)^4,
//          one_nonedge = 9 m(N-1) (5^N)^2, two_nonedge = 6 m(N-1)^2
// At N = 0 copies holds the base count and the other terms are zero.
struct TermBreakdown {
  ExactInt copies_term;
  ExactInt all_blob_term;
  ExactInt one_nonedge_term;
  ExactInt two_nonedge_term;

  ExactInt total() const { return copies_term + all_blob_term + one_nonedge_term + two_nonedge_term; }

  friend bool operator==(const TermBreakdown&, const TermBreakdown&) = default;
};

struct SummationPair {
  ExactInt summation;
  ExactRational closed;

  bool equal() const { return ExactRational(summation) == closed; }
};

struct PartialSums {
  SummationPair q;
  SummationPair r;
  SummationPair s;

  ExactInt total() const { return q.summation + r.summation + s.summation; }
};

// ---- C4 family ----

// 4^{N+1}(4^{N+1}-1)/6. Cross-checked against the binomial form.
ExactInt c4_nonedges_closed(unsigned level);
// C(4^{N+1},2) - 4^{N+1} sum_{i=0}^{N} 4^i.
ExactInt c4_nonedges_binomial_form(unsigned level);
ExactInt c4_edges(unsigned level);

ExactInt c4_recurrence_T(unsigned level);
TermBreakdown c4_recurrence_breakdown(unsigned level);
PartialSums c4_partial_sums(unsigned level);
ExactRational c4_closed_T(unsigned level, FormulaVariant variant);

// ---- Theta(2,2,2) family ----

// 5^N(5^{N+1}-1). Cross-checked against 4 * 5^N * sum_{i=0}^{N} 5^i.
ExactInt theta_nonedges_closed(unsigned level);
ExactInt theta_nonedges_sum_form(unsigned level);
// 6 * 5^N * sum_{i=0}^{N} 5^i.
ExactInt theta_edges_closed(unsigned level);

ExactInt theta_recurrence_T(unsigned level);
TermBreakdown theta_recurrence_breakdown(unsigned level);
PartialSums theta_partial_sums(unsigned level);
ExactRational theta_closed_T(unsigned level, FormulaVariant variant);

// ---- Dispatch by family; nullopt for kCustom, which has no formulas. ----

std::optional<ExactInt> nonedges_formula(BaseFamily family, unsigned level);
std::optional<ExactInt> edges_formula(BaseFamily family, unsigned level);
std::optional<ExactInt> recurrence_T(BaseFamily family, unsigned level);
std::optional<TermBreakdown> recurrence_breakdown(BaseFamily family, unsigned level);
std::optional<PartialSums> partial_sums(BaseFamily family, unsigned level);
std::optional<ExactRational> closed_T(BaseFamily family, unsigned level, FormulaVariant variant);

}  // namespace blowup

#endif  // BLOWUP_FORMULAS_H_

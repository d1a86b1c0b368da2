#include "blowup/formulas.h"

#include <gtest/gtest.h>

#include "blowup/blowup.h"
#include "blowup/c4_count.h"

namespace blowup {
namespace {

ExactRational q(long long num, long long den) { return ExactRational(num, den); }

TEST(C4NonEdgesTest, Values) {
  EXPECT_EQ(c4_nonedges_closed(0), 2);
  EXPECT_EQ(c4_nonedges_closed(1), 40);
  EXPECT_EQ(c4_nonedges_closed(2), 672);
  EXPECT_EQ(c4_nonedges_closed(3), 10880);
  EXPECT_EQ(c4_nonedges_binomial_form(2), 672);
  EXPECT_EQ(c4_edges(1), 80);
  EXPECT_EQ(c4_edges(2), 1344);
}

TEST(C4NonEdgesTest, MatchesConstructedGraphs) {
  for (unsigned n = 0; n <= 3; ++n) {
    const Graph g = nested_blowup(BlowupSpec::c4(n));
    EXPECT_EQ(c4_nonedges_closed(n), g.non_edge_count()) << n;
    EXPECT_EQ(c4_edges(n), g.edge_count()) << n;
  }
}

TEST(ThetaNonEdgesTest, Values) {
  EXPECT_EQ(theta_nonedges_closed(0), 4);
  EXPECT_EQ(theta_nonedges_closed(1), 120);
  EXPECT_EQ(theta_nonedges_closed(2), 3100);
  EXPECT_EQ(theta_edges_closed(0), 6);
  EXPECT_EQ(theta_edges_closed(1), 180);
  EXPECT_EQ(theta_edges_closed(2), 4650);
}

TEST(ThetaNonEdgesTest, MatchesConstructedGraphs) {
  for (unsigned n = 0; n <= 3; ++n) {
    const Graph g = nested_blowup(BlowupSpec::theta222(n));
    EXPECT_EQ(theta_nonedges_closed(n), g.non_edge_count()) << n;
    EXPECT_EQ(theta_edges_closed(n), g.edge_count()) << n;
  }
}

TEST(RecurrenceTest, C4Values) {
  EXPECT_EQ(c4_recurrence_T(0), 1);
  EXPECT_EQ(c4_recurrence_T(1), 404);
  EXPECT_EQ(c4_recurrence_T(2), 114512);
  EXPECT_EQ(c4_recurrence_T(3), 30051648);
  EXPECT_EQ(c4_recurrence_breakdown(1), (TermBreakdown{4, 256, 128, 16}));
  EXPECT_EQ(c4_recurrence_breakdown(0), (TermBreakdown{1, 0, 0, 0}));
}

TEST(RecurrenceTest, ThetaValues) {
  EXPECT_EQ(theta_recurrence_T(0), 3);
  EXPECT_EQ(theta_recurrence_T(1), 2886);
  EXPECT_EQ(theta_recurrence_T(2), 1947705);
  // copies, all-blob, 9 m n^2, 6 m^2
  EXPECT_EQ(theta_recurrence_breakdown(1), (TermBreakdown{15, 1875, 900, 96}));
}

TEST(RecurrenceTest, MatchesGraphCounts) {
  for (unsigned n = 0; n <= 2; ++n) {
    EXPECT_EQ(c4_recurrence_T(n), count_induced_c4_diagonal(nested_blowup(BlowupSpec::c4(n))).value);
    EXPECT_EQ(theta_recurrence_T(n),
              count_induced_c4_diagonal(nested_blowup(BlowupSpec::theta222(n))).value);
  }
}

TEST(PartialSumsTest, C4Values) {
  const PartialSums s0 = c4_partial_sums(0);
  EXPECT_EQ(s0.q.summation, 1);
  EXPECT_EQ(s0.r.summation, 0);
  EXPECT_EQ(s0.s.summation, 0);
  const PartialSums s1 = c4_partial_sums(1);
  EXPECT_EQ(s1.q.summation, 260);
  EXPECT_EQ(s1.r.summation, 128);
  EXPECT_EQ(s1.s.summation, 16);
  EXPECT_EQ(s1.q.closed, 260);
  EXPECT_EQ(c4_partial_sums(2).total(), 114512);
}

TEST(PartialSumsTest, ThetaValues) {
  const PartialSums s0 = theta_partial_sums(0);
  EXPECT_EQ(s0.q.summation, 3);
  EXPECT_EQ(s0.r.summation, 0);
  EXPECT_EQ(s0.s.summation, 0);
  const PartialSums s1 = theta_partial_sums(1);
  EXPECT_EQ(s1.q.summation, 1890);
  EXPECT_EQ(s1.r.summation, 96);
  EXPECT_EQ(s1.s.summation, 900);
  EXPECT_EQ(theta_partial_sums(2).total(), 1947705);
}

TEST(ClosedFormTest, C4Variants) {
  EXPECT_EQ(c4_closed_T(0, FormulaVariant::kDerivedProof), 1);
  EXPECT_EQ(c4_closed_T(1, FormulaVariant::kDerivedProof), 404);
  const ExactRational stated = c4_closed_T(0, FormulaVariant::kStatedTheorem);
  EXPECT_EQ(stated, q(8 * 1344, 5670));
  EXPECT_FALSE(is_integer(stated));
  EXPECT_EQ(to_string(stated), "256/135");
}

TEST(ClosedFormTest, ThetaVariants) {
  EXPECT_EQ(theta_closed_T(0, FormulaVariant::kDerivedProof), 3);
  EXPECT_EQ(theta_closed_T(1, FormulaVariant::kDerivedProof), 2886);
  const ExactRational stated = theta_closed_T(0, FormulaVariant::kStatedTheorem);
  EXPECT_EQ(stated, q(-150, 1240));
  EXPECT_LT(stated, 0);
  EXPECT_EQ(to_string(stated), "-15/124");
}

TEST(ClosedFormTest, StatedVariantsNeverMatchTheRecurrence) {
  for (unsigned n = 0; n <= kMaxFormulaLevel; ++n) {
    EXPECT_NE(c4_closed_T(n, FormulaVariant::kStatedTheorem), c4_recurrence_T(n)) << n;
    EXPECT_NE(theta_closed_T(n, FormulaVariant::kStatedTheorem), theta_recurrence_T(n)) << n;
  }
}

// ---- identities over the whole formula range ----

TEST(FormulaPropertyTest, C4LemmaInductionStep) {
  for (unsigned n = 0; n <= kMaxFormulaLevel; ++n) {
    const ExactInt order = ipow(4, n + 1);
    const ExactInt edges_n = choose2(order) - c4_nonedges_closed(n);
    EXPECT_EQ(c4_nonedges_closed(n + 1), choose2(ipow(4, n + 2)) - 4 * edges_n - 4 * order * order) << n;
  }
}

TEST(FormulaPropertyTest, ThetaLemmaInductionStep) {
  for (unsigned n = 0; n <= kMaxFormulaLevel; ++n) {
    EXPECT_EQ(theta_nonedges_closed(n + 1), choose2(ipow(5, n + 2)) - theta_edges_closed(n + 1)) << n;
    EXPECT_EQ(theta_edges_closed(n) + theta_nonedges_closed(n), choose2(ipow(5, n + 1))) << n;
  }
}

TEST(FormulaPropertyTest, PartialSumsAndClosedForms) {
  for (unsigned n = 0; n <= kMaxFormulaLevel; ++n) {
    for (const PartialSums& s : {c4_partial_sums(n), theta_partial_sums(n)}) {
      EXPECT_TRUE(s.q.equal()) << n;
      EXPECT_TRUE(s.r.equal()) << n;
      EXPECT_TRUE(s.s.equal()) << n;
    }
    const ExactInt c4_t = c4_recurrence_T(n);
    const ExactInt theta_t = theta_recurrence_T(n);
    EXPECT_EQ(c4_partial_sums(n).total(), c4_t) << n;
    EXPECT_EQ(theta_partial_sums(n).total(), theta_t) << n;
    EXPECT_EQ(c4_recurrence_breakdown(n).total(), c4_t) << n;
    EXPECT_EQ(theta_recurrence_breakdown(n).total(), theta_t) << n;
    EXPECT_EQ(c4_closed_T(n, FormulaVariant::kDerivedProof), c4_t) << n;
    EXPECT_EQ(theta_closed_T(n, FormulaVariant::kDerivedProof), theta_t) << n;
  }
}

TEST(FormulaPropertyTest, DerivedNumeratorsAreDivisible) {
  for (unsigned n = 0; n <= kMaxFormulaLevel; ++n) {
    const ExactInt p = ipow(4, n);
    EXPECT_EQ(p * (10240 * p * p * p - 5376 * p * p + 840 * p - 34) % 5670, 0) << n;
    const ExactInt r = ipow(5, n);
    EXPECT_EQ(r * (6300 * r * r * r - 2945 * r * r + 372 * r - 7) % 1240, 0) << n;
    EXPECT_TRUE(is_integer(c4_closed_T(n, FormulaVariant::kDerivedProof)));
    EXPECT_TRUE(is_integer(theta_closed_T(n, FormulaVariant::kDerivedProof)));
  }
}

TEST(FamilyDispatchTest, CustomHasNoFormulas) {
  EXPECT_FALSE(recurrence_T(BaseFamily::kCustom, 1).has_value());
  EXPECT_FALSE(nonedges_formula(BaseFamily::kCustom, 1).has_value());
  EXPECT_EQ(*recurrence_T(BaseFamily::kTheta222, 1), 2886);
  EXPECT_EQ(*edges_formula(BaseFamily::kC4, 1), 80);
}

TEST(ExactIntTest, Helpers) {
  EXPECT_EQ(exact_div(12, 4), 3);
  EXPECT_THROW(exact_div(13, 4), InexactDivision);
  EXPECT_THROW(exact_div(1, 0), InexactDivision);
  EXPECT_EQ(choose2(1), 0);
  EXPECT_EQ(choose2(ipow(4, 2)), 120);
  EXPECT_EQ(parse_exact_rational("-15/124"), q(-15, 124));
  EXPECT_EQ(parse_exact_int("123456789012345678901234567890").str(), "123456789012345678901234567890");
  EXPECT_THROW(parse_exact_int("12a"), std::invalid_argument);
  EXPECT_THROW(parse_exact_rational("1/0"), std::invalid_argument);
}

}  // namespace
}  // namespace blowup

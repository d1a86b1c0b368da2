#include "blowup/formulas.h"

#include <string>

namespace blowup {
namespace {

// sum_{i=from}^{to} base^{step*i}; zero when from > to.
ExactInt geometric_sum(std::uint64_t base, unsigned step, unsigned from, unsigned to) {
  ExactInt sum = 0;
  for (unsigned i = from; i <= to && from <= to; ++i) sum += ipow(base, std::uint64_t{step} * i);
  return sum;
}

void require_equal(const ExactInt& a, const ExactInt& b, const char* what, unsigned level) {
  if (a != b) {
    throw FormulaInconsistency(std::string(what) + " disagrees at level " + std::to_string(level) +
                               ": " + a.str() + " vs " + b.str());
  }
}

ExactRational ratio(const ExactInt& num, const ExactInt& den) { return ExactRational(num, den); }

}  // namespace

std::string_view variant_name(FormulaVariant variant) {
  return variant == FormulaVariant::kStatedTheorem ? "stated" : "derived";
}

// ---------------------------------------------------------------------------
// C4

ExactInt c4_nonedges_binomial_form(unsigned level) {
  const ExactInt order = ipow(4, level + 1);
  return choose2(order) - order * geometric_sum(4, 1, 0, level);
}

ExactInt c4_nonedges_closed(unsigned level) {
  const ExactInt order = ipow(4, level + 1);
  ExactInt closed = exact_div(order * (order - 1), 6);
  require_equal(closed, c4_nonedges_binomial_form(level), "C4 non-edge closed form", level);
  return closed;
}

ExactInt c4_edges(unsigned level) { return choose2(ipow(4, level + 1)) - c4_nonedges_closed(level); }

TermBreakdown c4_recurrence_breakdown(unsigned level) {
  if (level == 0) return {1, 0, 0, 0};
  const ExactInt prev_t = c4_recurrence_T(level - 1);
  const ExactInt prev_m = c4_nonedges_closed(level - 1);
  const ExactInt blob = ipow(4, level);  // vertices per blob
  return {
      4 * prev_t,
      blob * blob * blob * blob,
      4 * prev_m * blob * blob,
      4 * prev_m * prev_m,
  };
}

ExactInt c4_recurrence_T(unsigned level) {
  ExactInt t = 1;
  for (unsigned n = 1; n <= level; ++n) {
    const ExactInt m = c4_nonedges_closed(n - 1);
    const ExactInt blob = ipow(4, n);
    t = 4 * t + blob * blob * blob * blob + 4 * m * blob * blob + 4 * m * m;
  }
  return t;
}

PartialSums c4_partial_sums(unsigned level) {
  const unsigned n = level;
  const ExactInt p = ipow(4, n);
  const ExactInt p2 = p * p;
  const ExactInt p3 = p2 * p;

  PartialSums out;
  out.q.summation = p * geometric_sum(4, 3, 0, n);
  for (unsigned i = 1; i <= n; ++i) {
    out.r.summation += ipow(4, n + i + 1) * c4_nonedges_closed(i - 1);
    const ExactInt m = c4_nonedges_closed(n - i);
    out.s.summation += ipow(4, i) * m * m;
  }
  out.q.closed = ratio(p * (64 * p3 - 1), 63);
  out.r.closed = ratio(4 * p * (320 * p3 - 336 * p2 + 16), 1890);
  out.s.closed = ratio(4 * p * (80 * p3 - 168 * p2 + 105 * p - 17), 2835);
  return out;
}

ExactRational c4_closed_T(unsigned level, FormulaVariant variant) {
  const ExactInt p = ipow(4, level);
  const ExactInt p2 = p * p;
  const ExactInt p3 = p2 * p;
  if (variant == FormulaVariant::kStatedTheorem) {
    return ratio(8 * p * (1280 * p3 + 672 * p2 + 105 * p - 713), 5670);
  }
  return ratio(p * (10240 * p3 - 5376 * p2 + 840 * p - 34), 5670);
}

// ---------------------------------------------------------------------------
// Theta(2,2,2)

ExactInt theta_nonedges_sum_form(unsigned level) {
  return 4 * ipow(5, level) * geometric_sum(5, 1, 0, level);
}

ExactInt theta_nonedges_closed(unsigned level) {
  ExactInt closed = ipow(5, level) * (ipow(5, level + 1) - 1);
  require_equal(closed, theta_nonedges_sum_form(level), "Theta non-edge closed form", level);
  return closed;
}

ExactInt theta_edges_closed(unsigned level) {
  return 6 * ipow(5, level) * geometric_sum(5, 1, 0, level);
}

TermBreakdown theta_recurrence_breakdown(unsigned level) {
  if (level == 0) return {3, 0, 0, 0};
  const ExactInt prev_t = theta_recurrence_T(level - 1);
  const ExactInt prev_m = theta_nonedges_closed(level - 1);
  const ExactInt blob = ipow(5, level);
  return {
      5 * prev_t,
      3 * blob * blob * blob * blob,
      9 * prev_m * blob * blob,
      6 * prev_m * prev_m,
  };
}

ExactInt theta_recurrence_T(unsigned level) {
  ExactInt t = 3;
  for (unsigned n = 1; n <= level; ++n) {
    const ExactInt m = theta_nonedges_closed(n - 1);
    const ExactInt blob = ipow(5, n);
    t = 5 * t + 3 * blob * blob * blob * blob + 6 * m * m + 9 * m * blob * blob;
  }
  return t;
}

PartialSums theta_partial_sums(unsigned level) {
  const unsigned n = level;
  const ExactInt p = ipow(5, n);
  const ExactInt p2 = p * p;
  const ExactInt p3 = p2 * p;

  PartialSums out;
  out.q.summation = 3 * p * geometric_sum(5, 3, 0, n);
  for (unsigned i = 1; i <= n; ++i) {
    const ExactInt m = theta_nonedges_closed(n - i);
    out.r.summation += 6 * ipow(5, i - 1) * m * m;
    out.s.summation += 9 * ipow(5, n + i) * theta_nonedges_closed(i - 1);
  }
  out.q.closed = ratio(3 * p * (125 * p3 - 1), 124);
  out.r.closed = ratio(p * (150 * p3 - 310 * p2 + 186 * p - 26), 620);
  out.s.closed = ratio(3 * p * (750 * p3 - 775 * p2 + 25), 1240);
  return out;
}

ExactRational theta_closed_T(unsigned level, FormulaVariant variant) {
  const ExactInt p = ipow(5, level);
  const ExactInt p2 = p * p;
  const ExactInt p3 = p2 * p;
  const int constant = variant == FormulaVariant::kStatedTheorem ? -3877 : -7;
  return ratio(p * (6300 * p3 - 2945 * p2 + 372 * p + constant), 1240);
}

// ---------------------------------------------------------------------------

std::optional<ExactInt> nonedges_formula(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_nonedges_closed(level);
    case BaseFamily::kTheta222:
      return theta_nonedges_closed(level);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

std::optional<ExactInt> edges_formula(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_edges(level);
    case BaseFamily::kTheta222:
      return theta_edges_closed(level);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

std::optional<ExactInt> recurrence_T(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_recurrence_T(level);
    case BaseFamily::kTheta222:
      return theta_recurrence_T(level);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

std::optional<TermBreakdown> recurrence_breakdown(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_recurrence_breakdown(level);
    case BaseFamily::kTheta222:
      return theta_recurrence_breakdown(level);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

std::optional<PartialSums> partial_sums(BaseFamily family, unsigned level) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_partial_sums(level);
    case BaseFamily::kTheta222:
      return theta_partial_sums(level);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

std::optional<ExactRational> closed_T(BaseFamily family, unsigned level, FormulaVariant variant) {
  switch (family) {
    case BaseFamily::kC4:
      return c4_closed_T(level, variant);
    case BaseFamily::kTheta222:
      return theta_closed_T(level, variant);
    case BaseFamily::kCustom:
      break;
  }
  return std::nullopt;
}

}  // namespace blowup

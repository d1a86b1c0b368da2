#ifndef BLOWUP_C4_COUNT_H_
#define BLOWUP_C4_COUNT_H_

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "blowup/exact_int.h"
#include "blowup/graph.h"

namespace blowup {

inline constexpr std::uint64_t kDefaultSubsetCap = 1'000'000'000;

enum class CountMethod { kEnumeration, kDiagonal };

std::string_view method_name(CountMethod method);

struct CountOptions {
  // Enumeration refuses graphs with more than this many 4-subsets.
  std::uint64_t subset_cap = kDefaultSubsetCap;
  unsigned workers = 1;
};

struct CountResult {
  ExactInt value;
  CountMethod method;
  std::chrono::nanoseconds elapsed{0};
};

struct AgreedCount {
  ExactInt value;
  std::chrono::nanoseconds enumeration_elapsed{0};
  std::chrono::nanoseconds diagonal_elapsed{0};
};

class WorkCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two counters returned different values; always an implementation bug.
class CounterDisagreement : public std::logic_error {
 public:
  CounterDisagreement(ExactInt enumeration, ExactInt diagonal);

  const ExactInt& enumeration() const { return enumeration_; }
  const ExactInt& diagonal() const { return diagonal_; }

 private:
  ExactInt enumeration_;
  ExactInt diagonal_;
};

ExactInt four_subset_count(std::uint64_t n);
bool enumeration_within_cap(const Graph& g, std::uint64_t subset_cap);

// Checks every 4-subset for four induced edges with all induced degrees 2.
CountResult count_induced_c4_enum(const Graph& g, const CountOptions& options = {});

// Sums, over non-edges {u,v}, the non-adjacent pairs inside N(u) & N(v), then
// halves. Every induced C4 is seen once from each of its two diagonals.
CountResult count_induced_c4_diagonal(const Graph& g, const CountOptions& options = {});

// The diagonal sum before halving.
ExactInt diagonal_pair_sum(const Graph& g, unsigned workers = 1);

CountResult count_induced_c4(const Graph& g, CountMethod method, const CountOptions& options = {});

// Throws CounterDisagreement if the methods differ.
AgreedCount count_both_and_check(const Graph& g, const CountOptions& options = {});

}  // namespace blowup

#endif  // BLOWUP_C4_COUNT_H_

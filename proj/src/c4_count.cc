#include "blowup/c4_count.h"

#include <algorithm>
#include <bit>
#include <thread>
#include <vector>

namespace blowup {
namespace {

using Clock = std::chrono::steady_clock;

// Runs body(worker, workers) on `workers` threads and merges the per-worker
// accumulators in worker order.
template <typename Body>
ExactInt run_partitioned(unsigned workers, Body body) {
  workers = std::max(1u, workers);
  std::vector<CountAccumulator> partial(workers);
  if (workers == 1) {
    body(0u, 1u, partial[0]);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] { body(w, workers, partial[w]); });
    }
  }
  CountAccumulator total;
  for (const auto& p : partial) total.merge(p);
  return total.value();
}

}  // namespace

std::string_view method_name(CountMethod method) {
  return method == CountMethod::kEnumeration ? "enum" : "diagonal";
}

CounterDisagreement::CounterDisagreement(ExactInt enumeration, ExactInt diagonal)
    : std::logic_error("induced C4 counters disagree: enumeration=" + enumeration.str() +
                       " diagonal=" + diagonal.str()),
      enumeration_(std::move(enumeration)),
      diagonal_(std::move(diagonal)) {}

ExactInt four_subset_count(std::uint64_t n) {
  if (n < 4) return 0;
  const ExactInt m = n;
  return m * (m - 1) * (m - 2) * (m - 3) / 24;
}

bool enumeration_within_cap(const Graph& g, std::uint64_t subset_cap) {
  return four_subset_count(g.order()) <= subset_cap;
}

CountResult count_induced_c4_enum(const Graph& g, const CountOptions& options) {
  const auto start = Clock::now();
  if (!enumeration_within_cap(g, options.subset_cap)) {
    throw WorkCapExceeded("enumeration over " + four_subset_count(g.order()).str() +
                          " 4-subsets exceeds the subset cap of " +
                          std::to_string(options.subset_cap));
  }
  const auto n = static_cast<Vertex>(g.order());
  ExactInt value = run_partitioned(options.workers, [&](unsigned id, unsigned stride,
                                                       CountAccumulator& acc) {
    std::uint64_t local = 0;
    for (Vertex a = id; a < n; a += stride) {
      for (Vertex b = a + 1; b < n; ++b) {
        const unsigned eab = g.adjacent(a, b);
        for (Vertex c = b + 1; c < n; ++c) {
          const unsigned eac = g.adjacent(a, c);
          const unsigned ebc = g.adjacent(b, c);
          for (Vertex d = c + 1; d < n; ++d) {
            const unsigned ead = g.adjacent(a, d);
            const unsigned ebd = g.adjacent(b, d);
            const unsigned ecd = g.adjacent(c, d);
            const unsigned deg_a = eab + eac + ead;
            const unsigned deg_b = eab + ebc + ebd;
            const unsigned deg_c = eac + ebc + ecd;
            const unsigned deg_d = ead + ebd + ecd;
            const unsigned edges = (deg_a + deg_b + deg_c + deg_d) / 2;
            local += edges == 4 && deg_a == 2 && deg_b == 2 && deg_c == 2 && deg_d == 2;
          }
        }
      }
      acc.add(local);
      local = 0;
    }
  });
  return {std::move(value), CountMethod::kEnumeration,
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
}

ExactInt diagonal_pair_sum(const Graph& g, unsigned workers) {
  const auto n = static_cast<Vertex>(g.order());
  const std::size_t words = g.words_per_row();
  return run_partitioned(workers, [&](unsigned id, unsigned stride, CountAccumulator& acc) {
    std::vector<Word> common(words);
    for (Vertex u = id; u < n; u += stride) {
      const auto ru = g.row(u);
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v)) continue;
        const auto rv = g.row(v);
        std::uint64_t size = 0;
        for (std::size_t w = 0; w < words; ++w) {
          common[w] = ru[w] & rv[w];
          size += std::popcount(common[w]);
        }
        if (size < 2) continue;
        // Twice the number of edges inside the common neighbourhood.
        std::uint64_t inner_degree_sum = 0;
        for (std::size_t w = 0; w < words; ++w) {
          for (Word bits = common[w]; bits != 0; bits &= bits - 1) {
            const auto x = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
            const auto rx = g.row(x);
            for (std::size_t k = 0; k < words; ++k) {
              inner_degree_sum += std::popcount(rx[k] & common[k]);
            }
          }
        }
        acc.add(size * (size - 1) / 2 - inner_degree_sum / 2);
      }
    }
  });
}

CountResult count_induced_c4_diagonal(const Graph& g, const CountOptions& options) {
  const auto start = Clock::now();
  const ExactInt raw = diagonal_pair_sum(g, options.workers);
  return {exact_div(raw, 2), CountMethod::kDiagonal,
          std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - start)};
}

CountResult count_induced_c4(const Graph& g, CountMethod method, const CountOptions& options) {
  return method == CountMethod::kEnumeration ? count_induced_c4_enum(g, options)
                                             : count_induced_c4_diagonal(g, options);
}

AgreedCount count_both_and_check(const Graph& g, const CountOptions& options) {
  CountResult by_enum = count_induced_c4_enum(g, options);
  CountResult by_diagonal = count_induced_c4_diagonal(g, options);
  if (by_enum.value != by_diagonal.value) {
    throw CounterDisagreement(std::move(by_enum.value), std::move(by_diagonal.value));
  }
  return {std::move(by_enum.value), by_enum.elapsed, by_diagonal.elapsed};
}

}  // namespace blowup

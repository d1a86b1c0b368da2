#ifndef BLOWUP_TESTS_ORACLES_H_
#define BLOWUP_TESTS_ORACLES_H_

// Test-only reference implementations. Nothing here calls into the counting
// or blow-up code under test.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "blowup/graph.h"

namespace blowup::testing {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

inline Graph from_matrix(const Matrix& m) {
  GraphBuilder b(m.size());
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = u + 1; v < m.size(); ++v)
      if (m[u][v]) b.add_edge(u, v);
  return std::move(b).build();
}

// Induced C4 test by explicit pattern: {a,b,c,d} is an induced 4-cycle iff
// for one of the three perfect matchings the matched pairs are the two
// non-edges and the remaining four pairs are edges.
inline bool is_induced_c4(const Matrix& m, int a, int b, int c, int d) {
  const int v[4] = {a, b, c, d};
  // Matchings of {0,1,2,3}: {01,23}, {02,13}, {03,12}.
  const int matchings[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
  for (const auto& mt : matchings) {
    const bool diag_absent = !m[v[mt[0]]][v[mt[1]]] && !m[v[mt[2]]][v[mt[3]]];
    const bool sides_present = m[v[mt[0]]][v[mt[2]]] && m[v[mt[0]]][v[mt[3]]] &&
                               m[v[mt[1]]][v[mt[2]]] && m[v[mt[1]]][v[mt[3]]];
    if (diag_absent && sides_present) return true;
  }
  return false;
}

inline std::uint64_t brute_force_c4(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  std::uint64_t count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) count += is_induced_c4(m, a, b, c, d);
  return count;
}

// Adjacency in the level-N nested blow-up from base-n digits: write u and v
// in base n with N+1 digits; they are adjacent iff at the most significant
// digit where they differ the base graph joins the two digits.
inline Matrix nested_blowup_by_digits(const Matrix& base, unsigned level) {
  const std::size_t n = base.size();
  std::size_t total = 1;
  for (unsigned i = 0; i <= level; ++i) total *= n;
  Matrix m(total, std::vector<bool>(total, false));
  for (std::size_t u = 0; u < total; ++u) {
    for (std::size_t v = 0; v < total; ++v) {
      if (u == v) continue;
      std::size_t place = total / n;
      while ((u / place) % n == (v / place) % n) place /= n;
      m[u][v] = base[(u / place) % n][(v / place) % n];
    }
  }
  return m;
}

inline Matrix random_matrix(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Matrix m(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) m[u][v] = m[v][u] = coin(rng);
  return m;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Vertex>(i);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline std::uint64_t count_edges(const Matrix& m) {
  std::uint64_t e = 0;
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v) e += m[u][v];
  return e;
}

}  // namespace blowup::testing

#endif  // BLOWUP_TESTS_ORACLES_H_

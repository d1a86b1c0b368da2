#ifndef BLOWUP_GRAPH_H_
#define BLOWUP_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace blowup {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t bits) {
  return (bits + kWordBits - 1) / kWordBits;
}

// An unordered pair of non-adjacent vertices, u < v.
struct NonEdge {
  Vertex u;
  Vertex v;

  friend bool operator==(const NonEdge&, const NonEdge&) = default;
};

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphBuilder;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is stored
// as n packed bit-rows of width n; rows are symmetric with a zero diagonal.
class Graph {
 public:
  Graph() = default;

  std::size_t order() const { return order_; }
  std::size_t words_per_row() const { return words_per_row_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * words_per_row_ + v / kWordBits] >> (v % kWordBits)) & 1u;
  }

  std::span<const Word> row(Vertex v) const {
    return {bits_.data() + v * words_per_row_, words_per_row_};
  }

  std::size_t degree(Vertex v) const;
  std::uint64_t edge_count() const;
  std::uint64_t non_edge_count() const;
  std::uint64_t pair_count() const;

  // Sorted lexicographically on (u, v).
  std::vector<Edge> edges() const;
  std::vector<NonEdge> non_edges() const;

  // Relabels vertex v as perm[v]. perm must be a permutation of 0..n-1.
  Graph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t order_ = 0;
  std::size_t words_per_row_ = 0;
  std::vector<Word> bits_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  std::size_t order() const { return graph_.order_; }

  // Throws std::invalid_argument on self-loops and out-of-range ids.
  // Re-adding an existing edge is a no-op; has_edge() lets callers detect it.
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  // Sets the half-open range [begin, end) of row u. Caller keeps symmetry.
  void fill_row_range(Vertex u, std::size_t begin, std::size_t end);
  void set_bit(Vertex u, Vertex v);

  Graph build() &&;

 private:
  Word* row_data(Vertex u) { return graph_.bits_.data() + u * graph_.words_per_row_; }

  Graph graph_;
};

Graph complete_graph(std::size_t n);
Graph empty_graph(std::size_t n);

}  // namespace blowup

#endif  // BLOWUP_GRAPH_H_

#include "blowup/graph.h"

#include <bit>
#include <cassert>
#include <stdexcept>
#include <string>

namespace blowup {

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Word w : row(v)) d += std::popcount(w);
  return d;
}

std::uint64_t Graph::edge_count() const {
  std::uint64_t total = 0;
  for (Word w : bits_) total += std::popcount(w);
  return total / 2;
}

std::uint64_t Graph::pair_count() const {
  const std::uint64_t n = order_;
  return n < 2 ? 0 : n * (n - 1) / 2;
}

std::uint64_t Graph::non_edge_count() const { return pair_count() - edge_count(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < order_; ++u) {
    auto r = row(u);
    for (std::size_t w = (u + 1) / kWordBits; w < words_per_row_; ++w) {
      Word bits = r[w];
      if (w == (u + 1) / kWordBits) bits &= ~Word{0} << ((u + 1) % kWordBits);
      while (bits != 0) {
        const auto v = static_cast<Vertex>(w * kWordBits + std::countr_zero(bits));
        out.push_back({u, v});
        bits &= bits - 1;
      }
    }
  }
  return out;
}

std::vector<NonEdge> Graph::non_edges() const {
  std::vector<NonEdge> out;
  out.reserve(non_edge_count());
  for (Vertex u = 0; u < order_; ++u) {
    for (Vertex v = u + 1; v < order_; ++v) {
      if (!adjacent(u, v)) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order_) {
    throw std::invalid_argument("permutation size " + std::to_string(perm.size()) +
                                " does not match graph order " + std::to_string(order_));
  }
  std::vector<bool> seen(order_, false);
  for (Vertex p : perm) {
    if (p >= order_ || seen[p]) throw std::invalid_argument("not a permutation");
    seen[p] = true;
  }
  GraphBuilder b(order_);
  for (const Edge& e : edges()) b.add_edge(perm[e.u], perm[e.v]);
  return std::move(b).build();
}

GraphBuilder::GraphBuilder(std::size_t order) {
  if (order > std::size_t{1} << 31) throw std::invalid_argument("graph order too large");
  graph_.order_ = order;
  graph_.words_per_row_ = words_for(order);
  graph_.bits_.assign(order * graph_.words_per_row_, 0);
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = graph_.order_;
  if (u >= n || v >= n) {
    throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                "} out of range for order " + std::to_string(n));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  set_bit(u, v);
  set_bit(v, u);
}

void GraphBuilder::set_bit(Vertex u, Vertex v) {
  row_data(u)[v / kWordBits] |= Word{1} << (v % kWordBits);
}

void GraphBuilder::fill_row_range(Vertex u, std::size_t begin, std::size_t end) {
  Word* r = row_data(u);
  while (begin < end && begin % kWordBits != 0) {
    r[begin / kWordBits] |= Word{1} << (begin % kWordBits);
    ++begin;
  }
  while (begin + kWordBits <= end) {
    r[begin / kWordBits] = ~Word{0};
    begin += kWordBits;
  }
  while (begin < end) {
    r[begin / kWordBits] |= Word{1} << (begin % kWordBits);
    ++begin;
  }
}

Graph GraphBuilder::build() && {
#ifndef NDEBUG
  const Graph& g = graph_;
  for (Vertex u = 0; u < g.order(); ++u) {
    assert(!g.adjacent(u, u));
    for (Vertex v = u + 1; v < g.order(); ++v) assert(g.adjacent(u, v) == g.adjacent(v, u));
  }
#endif
  return std::move(graph_);
}

Graph complete_graph(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build();
}

Graph empty_graph(std::size_t n) { return GraphBuilder(n).build(); }

}  // namespace blowup

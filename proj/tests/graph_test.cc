#include "blowup/graph.h"

#include <random>
#include <stdexcept>

#include <gtest/gtest.h>

#include "oracles.h"

namespace blowup {
namespace {

TEST(GraphTest, EmptyAndCompleteCounts) {
  for (std::size_t n = 0; n <= 16; ++n) {
    const Graph k = complete_graph(n);
    const Graph e = empty_graph(n);
    EXPECT_EQ(k.edge_count(), n * (n ? n - 1 : 0) / 2);
    EXPECT_EQ(k.non_edge_count(), 0u);
    EXPECT_EQ(e.edge_count(), 0u);
    EXPECT_EQ(e.non_edge_count(), k.edge_count());
  }
}

TEST(GraphTest, BuilderRejectsSelfLoopsAndOutOfRange) {
  GraphBuilder b(3);
  EXPECT_THROW(b.add_edge(1, 1), std::invalid_argument);
  EXPECT_THROW(b.add_edge(0, 3), std::invalid_argument);
  b.add_edge(0, 2);
  EXPECT_TRUE(b.has_edge(2, 0));
}

TEST(GraphTest, RowsCrossWordBoundaries) {
  GraphBuilder b(130);
  b.add_edge(0, 129);
  b.add_edge(63, 64);
  b.add_edge(64, 127);
  const Graph g = std::move(b).build();
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_TRUE(g.adjacent(64, 63));
  EXPECT_EQ(g.degree(64), 2u);
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 129}, {63, 64}, {64, 127}}));
}

TEST(GraphTest, RandomGraphsKeepInvariants) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 150;
    const auto m = testing::random_matrix(n, 0.3, rng);
    const Graph g = testing::from_matrix(m);
    for (Vertex u = 0; u < n; ++u) {
      EXPECT_FALSE(g.adjacent(u, u));
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(g.adjacent(u, v), g.adjacent(v, u));
    }
    EXPECT_EQ(g.edge_count(), testing::count_edges(m));
    EXPECT_EQ(g.edge_count() + g.non_edge_count(), n * (n - 1) / 2);

    const auto non_edges = g.non_edges();
    ASSERT_EQ(non_edges.size(), g.non_edge_count());
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
      EXPECT_LT(non_edges[i].u, non_edges[i].v);
      EXPECT_FALSE(g.adjacent(non_edges[i].u, non_edges[i].v));
      if (i > 0) {
        const auto& a = non_edges[i - 1];
        const auto& b = non_edges[i];
        EXPECT_TRUE(a.u < b.u || (a.u == b.u && a.v < b.v));
      }
    }
  }
}

TEST(GraphTest, PermutedRelabelsEdges) {
  GraphBuilder b(4);
  b.add_edge(0, 1);
  b.add_edge(1, 2);
  const Graph g = std::move(b).build();
  const std::vector<Vertex> perm = {3, 2, 1, 0};
  const Graph p = g.permuted(perm);
  EXPECT_TRUE(p.adjacent(3, 2));
  EXPECT_TRUE(p.adjacent(2, 1));
  EXPECT_FALSE(p.adjacent(0, 1));
  EXPECT_EQ(p.edge_count(), 2u);

  const std::vector<Vertex> bad = {0, 0, 1, 2};
  EXPECT_THROW(g.permuted(bad), std::invalid_argument);
  EXPECT_THROW(g.permuted(std::vector<Vertex>{0, 1}), std::invalid_argument);
}

}  // namespace
}  // namespace blowup

#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "conecross/graph.hpp"
#include "conecross/planarity.hpp"
#include "oracles.hpp"

using namespace conecross;

TEST(Planarity, Examples) {
  EXPECT_TRUE(is_planar(complete_graph(4)));
  EXPECT_FALSE(is_planar(complete_graph(5)));
  EXPECT_FALSE(is_planar(complete_bipartite(3, 3)));
  EXPECT_TRUE(is_planar(complete_bipartite(2, 7)));
  EXPECT_TRUE(is_planar(Multigraph(0)));
  EXPECT_TRUE(is_planar(Multigraph(1)));
  EXPECT_FALSE(is_planar(fig1_graph()));
  EXPECT_TRUE(is_planar(multiply_edges(complete_graph(4), 5)));
}

TEST(Planarity, DisconnectedInput) {
  EXPECT_TRUE(is_planar(disjoint_union(complete_graph(4), complete_graph(4))));
  EXPECT_FALSE(is_planar(disjoint_union(complete_graph(4), complete_graph(5))));
  EXPECT_FALSE(is_planar(disjoint_union(Multigraph(3), complete_bipartite(3, 3))));
}

TEST(Planarity, KuratowskiWitness) {
  EXPECT_FALSE(kuratowski_edges(4, edge_list(complete_graph(4))).has_value());
  auto w = kuratowski_edges(5, edge_list(complete_graph(5)));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->size(), 10u);
  // The witness of a nonplanar graph is itself nonplanar.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    Multigraph g = oracle::random_graph(9, 0.6, rng);
    auto edges = edge_list(g);
    auto k = kuratowski_edges(g.n(), edges);
    ASSERT_EQ(k.has_value(), !is_planar(g));
    if (!k) continue;
    std::vector<std::pair<int, int>> sub;
    for (int i : *k) sub.push_back(edges[i]);
    ASSERT_FALSE(is_planar_edges(g.n(), sub));
    // Minimal: removing any witness edge leaves it planar.
    for (std::size_t i = 0; i < sub.size(); ++i) {
      auto minus = sub;
      minus.erase(minus.begin() + i);
      ASSERT_TRUE(is_planar_edges(g.n(), minus));
    }
  }
}

TEST(Planarity, AgreesWithMinorOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(5, 8)(rng);
    double p = std::uniform_real_distribution<double>(0.3, 0.9)(rng);
    Multigraph g = oracle::random_graph(n, p, rng);
    ASSERT_EQ(is_planar(g), oracle::planar_by_minors(oracle::simple_of(g))) << trial;
  }
}

TEST(Planarity, EulerConditionOnPlanarGraphs) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 12)(rng);
    Multigraph g = oracle::random_graph(n, 0.4, rng);
    if (is_planar(g)) {
      EXPECT_LE(static_cast<int>(g.entries().size()), 3 * n - 6);
    }
    if (static_cast<int>(g.entries().size()) > 3 * n - 6) {
      EXPECT_FALSE(is_planar(g));
    }
  }
}

TEST(Planarity, InvariantUnderRelabellingAndSubdivision) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 10)(rng);
    Multigraph g = oracle::random_graph(n, 0.5, rng);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    bool planar = is_planar(g);
    ASSERT_EQ(is_planar(g.relabeled(perm)), planar);
    if (g.edge_count() > 0) {
      EdgeId e = std::uniform_int_distribution<int>(0, g.edge_count() - 1)(rng);
      ASSERT_EQ(is_planar(subdivide_edge(g, e, 2)), planar);
    }
  }
}

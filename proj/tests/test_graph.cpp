#include <gtest/gtest.h>

#include "conecross/constructions.hpp"
#include "conecross/graph.hpp"
#include "conecross/isomorphism.hpp"

using namespace conecross;

TEST(Generators, CompleteGraph) {
  EXPECT_EQ(complete_graph(5).n(), 5);
  EXPECT_EQ(complete_graph(5).edge_count(), 10);
  EXPECT_EQ(complete_graph(1).edge_count(), 0);
  EXPECT_EQ(complete_graph(7).edge_count(), 21);
  EXPECT_THROW(complete_graph(0), std::invalid_argument);
}

TEST(Generators, ConeAddsApex) {
  EXPECT_EQ(cone(complete_graph(5)), complete_graph(6));
  Multigraph star = cone(Multigraph(3));
  EXPECT_EQ(star.n(), 4);
  EXPECT_EQ(star.edge_count(), 3);
  EXPECT_EQ(star.degree(3), 3);
  Multigraph cf = cone(f_graph(3));
  EXPECT_EQ(cf.n(), 10);
  EXPECT_EQ(cf.edge_count(), 30);
}

TEST(Generators, FGraphCounts) {
  for (int k = 3; k <= 50; ++k) {
    Multigraph g = f_graph(k);
    EXPECT_EQ(g.n(), 3 * k);
    EXPECT_EQ(g.edge_count(), 7 * k);
    EXPECT_TRUE(g.is_simple());
  }
  EXPECT_THROW(f_graph(2), std::invalid_argument);
}

TEST(Generators, FGraphSpokes) {
  Multigraph g = f_graph(4);
  // x_0 reaches y_{-2}, y_{-1}, y_0, y_1 = ids 10, 11, 4, 5.
  for (Vertex y : {10, 11, 4, 5}) EXPECT_EQ(g.multiplicity(0, y), 1);
  EXPECT_EQ(g.degree(0), 6);
  for (int j = 0; j < 8; ++j) EXPECT_EQ(g.degree(4 + j), 4);
}

TEST(Generators, Fig1) {
  Multigraph g = fig1_graph();
  EXPECT_EQ(g.n(), 9);
  EXPECT_EQ(g.edge_count(), 21);
  EXPECT_EQ(static_cast<int>(g.entries().size()) - 3 * g.n() + 6, 0);
}

TEST(Generators, Fig1IsomorphicToF3) {
  auto iso = find_isomorphism(f_graph(3), fig1_graph());
  ASSERT_TRUE(iso.has_value());
  // Fixture: the first mapping found. Inner triangle goes to the triangle.
  const std::vector<Vertex> expected = f3_to_fig1();
  EXPECT_EQ(*iso, expected);
  for (Vertex x = 0; x < 3; ++x) EXPECT_LT((*iso)[x], 3);
  EXPECT_EQ(f_graph(3).relabeled(*iso), fig1_graph());
}

TEST(Generators, Fig3) {
  Multigraph g = fig3_graph();
  EXPECT_EQ(g.n(), 7);
  EXPECT_EQ(g.edge_count(), 16);
  EXPECT_EQ(g.degree(0), 6);
  Multigraph c = cone(g);
  EXPECT_EQ(c.n(), 8);
  EXPECT_EQ(c.edge_count(), 23);
}

TEST(Generators, MultiplyEdges) {
  EXPECT_EQ(multiply_edges(fig1_graph(), 1), fig1_graph());
  EXPECT_EQ(multiply_edges(fig1_graph(), 2).edge_count(), 42);
  EXPECT_EQ(multiply_edges(complete_graph(5), 3).edge_count(), 30);
  EXPECT_THROW(multiply_edges(complete_graph(3), 0), std::invalid_argument);
}

TEST(Generators, DisjointUnion) {
  Multigraph u = disjoint_union(complete_graph(7), complete_graph(5));
  EXPECT_EQ(u.n(), 12);
  EXPECT_EQ(u.edge_count(), 31);
  EXPECT_EQ(u.components().size(), 2u);
  Multigraph c = cone(u);
  EXPECT_EQ(c.n(), 13);
  EXPECT_EQ(c.edge_count(), 43);
  Multigraph with_isolated = disjoint_union(complete_graph(4), Multigraph(2));
  EXPECT_EQ(with_isolated.n(), 6);
  EXPECT_EQ(with_isolated.edge_count(), 6);
}

TEST(Generators, SubdivideEdge) {
  Multigraph s = subdivide_edge(complete_graph(5), 3, 1);
  EXPECT_EQ(s.n(), 6);
  EXPECT_EQ(s.edge_count(), 11);
  EXPECT_EQ(s.degree(5), 2);
  EXPECT_THROW(subdivide_edge(complete_graph(5), 0, 0), std::invalid_argument);
  EXPECT_THROW(subdivide_edge(complete_graph(5), 10, 1), std::out_of_range);
  // Only one copy of a parallel class is replaced.
  Multigraph m = subdivide_edge(multiply_edges(complete_graph(2), 3), 1, 2);
  EXPECT_EQ(m.multiplicity(0, 1), 2);
  EXPECT_EQ(m.edge_count(), 5);
}

TEST(Generators, Cycle) {
  EXPECT_EQ(cycle_graph(3), complete_graph(3));
  EXPECT_EQ(cycle_graph(6).edge_count(), 6);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Multigraph, RejectsBadInput) {
  EXPECT_THROW(Multigraph(3, std::vector<EdgeEntry>{{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(Multigraph(3, std::vector<EdgeEntry>{{0, 3, 1}}), std::invalid_argument);
  EXPECT_THROW(Multigraph(3, std::vector<EdgeEntry>{{0, 1, 0}}), std::invalid_argument);
  EXPECT_THROW(Multigraph(-1), std::invalid_argument);
}

TEST(Multigraph, InstanceIdsSorted) {
  Multigraph g(4, std::vector<EdgeEntry>{{2, 3, 1}, {1, 0, 2}, {0, 2, 1}, {0, 1, 1}});
  // {0,1} entries merge into multiplicity 3.
  ASSERT_EQ(g.edge_count(), 5);
  const auto& es = g.instances();
  EXPECT_EQ(std::make_tuple(es[0].u, es[0].v, es[0].copy), std::make_tuple(0, 1, 0));
  EXPECT_EQ(std::make_tuple(es[2].u, es[2].v, es[2].copy), std::make_tuple(0, 1, 2));
  EXPECT_EQ(std::make_tuple(es[3].u, es[3].v), std::make_tuple(0, 2));
  EXPECT_EQ(std::make_tuple(es[4].u, es[4].v), std::make_tuple(2, 3));
  for (int i = 0; i < g.edge_count(); ++i) EXPECT_EQ(es[i].id, i);
  EXPECT_TRUE(adjacent(es[0], es[1]));
  EXPECT_FALSE(adjacent(es[0], es[4]));
}

TEST(Multigraph, ConeEdgeIds) {
  for (const Multigraph& g : {fig1_graph(), multiply_edges(fig3_graph(), 2), f_graph(4)}) {
    Multigraph c = cone(g);
    for (const auto& e : g.instances()) {
      const auto& ce = c.edge(cone_edge_id(g, e.id));
      EXPECT_EQ(std::make_tuple(ce.u, ce.v, ce.copy), std::make_tuple(e.u, e.v, e.copy));
    }
    for (Vertex v = 0; v < g.n(); ++v) {
      const auto& ce = c.edge(cone_apex_edge_id(g, v));
      EXPECT_EQ(std::make_pair(ce.u, ce.v), std::make_pair(v, g.n()));
    }
  }
}

TEST(Isomorphism, AutomorphismCounts) {
  EXPECT_EQ(automorphisms(complete_graph(4)).size(), 24u);
  EXPECT_EQ(automorphisms(cycle_graph(6)).size(), 12u);
  EXPECT_EQ(automorphisms(complete_bipartite(3, 3)).size(), 72u);
  EXPECT_FALSE(find_isomorphism(cycle_graph(6), disjoint_union(cycle_graph(3), cycle_graph(3))).has_value());
}

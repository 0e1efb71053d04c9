#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "conecross/page_transform.hpp"
#include "conecross/solver.hpp"
#include "oracles.hpp"

using namespace conecross;

namespace {

std::int64_t brute_outerplanar(const Multigraph& g) {
  std::vector<Vertex> o(g.n());
  std::iota(o.begin(), o.end(), 0);
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  do best = std::min(best, count_crossings(BookDrawing::one_page(g, CyclicOrder(o))));
  while (std::next_permutation(o.begin() + 1, o.end()));
  return best;
}

}  // namespace

TEST(TwoPageBound, IntegerForm) {
  EXPECT_TRUE(two_page_bound_met(3, 1));
  EXPECT_FALSE(two_page_bound_met(3, 2));
  EXPECT_TRUE(two_page_bound_met(1, 0));
  EXPECT_FALSE(two_page_bound_met(1, 1));
  EXPECT_TRUE(two_page_bound_met(0, 0));
  // k = 5: bound 5/2 - (sqrt(41) - 1)/8 = 1.82..
  EXPECT_TRUE(two_page_bound_met(5, 1));
  EXPECT_FALSE(two_page_bound_met(5, 2));
}

TEST(OneToTwo, Examples) {
  Multigraph chords(6, std::vector<std::pair<Vertex, Vertex>>{{0, 3}, {1, 4}, {2, 5}});
  auto r = one_to_two(chords, CyclicOrder::identity(6));
  EXPECT_EQ(r.k, 3);
  EXPECT_EQ(r.cut, 2);
  EXPECT_EQ(r.crossings, 1);
  EXPECT_TRUE(r.bound_met);

  auto planar = one_to_two(cycle_graph(6), CyclicOrder::identity(6));
  EXPECT_EQ(planar.k, 0);
  EXPECT_EQ(planar.crossings, 0);
  EXPECT_EQ(planar.drawing.page_count, 1);

  auto k4 = one_to_two(complete_graph(4), CyclicOrder::identity(4));
  EXPECT_EQ(k4.k, 1);
  EXPECT_EQ(k4.crossings, 0);

  auto k5 = one_to_two(complete_graph(5), CyclicOrder::identity(5));
  EXPECT_EQ(k5.k, 5);
  EXPECT_LE(k5.crossings, 1);
  EXPECT_TRUE(k5.bound_met);
}

TEST(OneToTwo, RandomProperties) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 14)(rng);
    Multigraph g = oracle::random_graph(n, 0.45, rng);
    std::vector<Vertex> o(n);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    CyclicOrder order(o);
    auto r = one_to_two(g, order);
    ASSERT_EQ(r.drawing.order, order);
    ASSERT_EQ(r.crossings, r.k - r.cut);
    ASSERT_EQ(r.crossings, count_crossings(r.drawing));
    ASSERT_LE(r.crossings, r.k);
    if (r.k >= 1) {
      ASSERT_TRUE(r.bound_met);
    }
    // Exact max-cut only when every circle-graph component is small.
    if (g.edge_count() > 32) continue;
    auto fixed = two_page_fixed_order(g, order);
    ASSERT_LE(fixed.crossings, r.crossings);
    ASSERT_EQ(fixed.crossings, count_crossings(fixed.drawing));
  }
}

TEST(FixedOrder, Examples) {
  EXPECT_EQ(two_page_cr_fixed_order(complete_graph(4), CyclicOrder::identity(4)), 0);
  std::vector<Vertex> o{0, 1, 2, 3, 4};
  do EXPECT_EQ(two_page_cr_fixed_order(complete_graph(5), CyclicOrder(o)), 1);
  while (std::next_permutation(o.begin() + 1, o.end()));
  MaxCutOptions tiny;
  tiny.exact_limit = 3;
  EXPECT_THROW(two_page_cr_fixed_order(complete_graph(6), CyclicOrder::identity(6), tiny), MaxCutLimitExceeded);
}

TEST(Outerplanar, Examples) {
  auto k4 = outerplanar_cr(complete_graph(4));
  EXPECT_EQ(k4.bracket.upper, 1);
  EXPECT_TRUE(k4.bracket.exact());
  EXPECT_EQ(outerplanar_cr(complete_graph(5)).bracket.upper, 5);
  EXPECT_EQ(outerplanar_cr(cycle_graph(6)).bracket.upper, 0);
  auto r = outerplanar_cr(complete_graph(6));
  EXPECT_EQ(r.bracket.upper, 15);
  EXPECT_EQ(count_crossings(r.drawing), 15);
  ASSERT_TRUE(r.bracket.certificate);
  EXPECT_TRUE(verify_certificate(complete_graph(6), *r.bracket.certificate).valid);
}

TEST(Outerplanar, MatchesBruteForce) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 40; ++trial) {
    int n = std::uniform_int_distribution<int>(3, 8)(rng);
    Multigraph g = oracle::random_graph(n, 0.6, rng);
    if (trial % 4 == 0) g = multiply_edges(g, 2);
    auto r = outerplanar_cr(g);
    ASSERT_TRUE(r.bracket.exact());
    ASSERT_EQ(r.bracket.upper, brute_outerplanar(g));
    ASSERT_TRUE(r.drawing.order.is_canonical());
  }
}

TEST(Outerplanar, ThreadIndependent) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 6; ++trial) {
    Multigraph g = oracle::random_graph(9, 0.5, rng);
    OrderSearchOptions one, four;
    four.threads = 4;
    auto a = outerplanar_cr(g, one), b = outerplanar_cr(g, four);
    EXPECT_EQ(a.bracket.upper, b.bracket.upper);
    EXPECT_EQ(a.drawing.order, b.drawing.order);
  }
}

TEST(Outerplanar, BudgetGivesBracket) {
  OrderSearchOptions opts;
  opts.budget_ms = 1;
  auto r = outerplanar_cr(complete_graph(11), opts);
  EXPECT_LE(r.bracket.lower, r.bracket.upper);
  if (!r.bracket.exact()) {
    EXPECT_EQ(r.bracket.status, SolveStatus::bounds_only);
  }
  OrderSearchOptions small_limit;
  small_limit.exact_limit = 5;
  auto big = outerplanar_cr(fig1_graph(), small_limit);
  EXPECT_EQ(big.bracket.status, SolveStatus::bounds_only);
  EXPECT_EQ(count_crossings(big.drawing), big.bracket.upper);
}

TEST(TwoPage, Examples) {
  auto k5 = two_page_cr(complete_graph(5));
  EXPECT_EQ(k5.bracket.upper, 1);
  EXPECT_TRUE(k5.bracket.exact());
  auto k6 = two_page_cr(complete_graph(6));
  EXPECT_EQ(k6.bracket.upper, 3);
  EXPECT_TRUE(k6.bracket.exact());
  EXPECT_EQ(count_crossings(k6.drawing), 3);
  EXPECT_EQ(two_page_cr(cycle_graph(6)).bracket.upper, 0);
}

TEST(TwoPage, ChainOfInequalities) {
  // outerplanar >= two-page >= cr on small graphs.
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 12; ++trial) {
    Multigraph g = oracle::random_graph(std::uniform_int_distribution<int>(5, 7)(rng), 0.6, rng);
    auto op = outerplanar_cr(g).bracket;
    auto tp = two_page_cr(g).bracket;
    auto cr = cr_exact(g);
    ASSERT_TRUE(op.exact() && tp.exact() && cr.exact());
    EXPECT_GE(op.upper, tp.upper);
    EXPECT_GE(tp.upper, cr.upper);
    // The cone drawing over the best 1-page order.
    auto cone_cert = book_certificate(cone_book_drawing(g, outerplanar_cr(g).drawing.order));
    EXPECT_EQ(cone_cert.size(), op.upper);
    EXPECT_TRUE(verify_certificate(cone(g), cone_cert).valid);
  }
}

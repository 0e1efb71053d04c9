#include <gtest/gtest.h>

#include <random>

#include "conecross/maxcut.hpp"
#include "oracles.hpp"

using namespace conecross;

namespace {

SimpleGraph complete(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
  return g;
}

SimpleGraph random_simple(int n, double p, std::mt19937_64& rng) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST(Edwards, Values) {
  EXPECT_DOUBLE_EQ(edwards_bound(1).value(), 0.75);
  EXPECT_DOUBLE_EQ(edwards_bound(3).value(), 2.0);
  EXPECT_DOUBLE_EQ(edwards_bound(0).value(), 0.0);
  EXPECT_TRUE(edwards_bound(1).met_by(1));
  EXPECT_FALSE(edwards_bound(1).met_by(0));
  EXPECT_TRUE(edwards_bound(3).met_by(2));
  EXPECT_FALSE(edwards_bound(3).met_by(1));
  EXPECT_TRUE(edwards_bound(0).met_by(0));
  EXPECT_THROW(edwards_bound(-1), std::invalid_argument);
}

TEST(Edwards, IntegerFormMatchesFloatingPoint) {
  for (std::int64_t m = 0; m <= 2000; ++m)
    for (std::int64_t c = 0; c <= m; ++c) {
      double exact = edwards_bound(m).value();
      // Skip the measure-zero equality cases, where floating point is unreliable.
      if (std::abs(c - exact) < 1e-9) continue;
      ASSERT_EQ(edwards_bound(m).met_by(c), c > exact) << m << " " << c;
    }
}

TEST(MaxCutExact, Examples) {
  EXPECT_EQ(maxcut_exact(complete(3)).size, 2);
  EXPECT_EQ(maxcut_exact(complete(4)).size, 4);
  EXPECT_EQ(maxcut_exact(cycle(5)).size, 4);
  EXPECT_EQ(maxcut_exact(SimpleGraph(0)).size, 0);
  auto cut = maxcut_exact(complete(4));
  EXPECT_EQ(cut.side, (std::vector<std::uint8_t>{0, 0, 1, 1}));
}

TEST(MaxCutExact, TieBreakIsLexicographicallySmallest) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = random_simple(std::uniform_int_distribution<int>(1, 9)(rng), 0.4, rng);
    auto cut = maxcut_exact(g);
    // Brute force over sides in lexicographic order, A = 0 first.
    const int n = g.n();
    std::vector<std::uint8_t> best;
    int best_size = -1;
    for (std::uint32_t code = 0; code < (1u << n); ++code) {
      std::vector<std::uint8_t> side(n);
      for (int i = 0; i < n; ++i) side[i] = (code >> (n - 1 - i)) & 1;
      // Within each component the first vertex stays in A.
      bool ok = true;
      for (const auto& comp : g.components()) ok = ok && side[*std::min_element(comp.begin(), comp.end())] == 0;
      if (!ok) continue;
      int s = cut_size(g, side);
      if (s > best_size) {
        best_size = s;
        best = side;
      }
    }
    ASSERT_EQ(cut.size, best_size);
    ASSERT_EQ(cut.side, best);
  }
}

TEST(MaxCutExact, MatchesBruteForce) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    SimpleGraph g = random_simple(n, p, rng);
    auto cut = maxcut_exact(g);
    ASSERT_EQ(cut.size, oracle::maxcut_brute(g));
    ASSERT_EQ(cut.size, cut_size(g, cut.side));
  }
}

TEST(MaxCutExact, LimitExceeded) {
  MaxCutOptions opts;
  opts.exact_limit = 5;
  EXPECT_THROW(maxcut_exact(cycle(6), opts), MaxCutLimitExceeded);
  // The limit is per component.
  SimpleGraph two(8);
  for (int i = 0; i < 4; ++i) two.add_edge(i, (i + 1) % 4), two.add_edge(4 + i, 4 + (i + 1) % 4);
  EXPECT_EQ(maxcut_exact(two, opts).size, 8);
}

TEST(MaxCutEdwards, MeetsBound) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 40)(rng);
    double p = std::uniform_real_distribution<double>(0.05, 0.9)(rng);
    SimpleGraph g = random_simple(n, p, rng);
    auto cut = maxcut_edwards(g);
    ASSERT_TRUE(edwards_bound(g.m()).met_by(cut.size));
    ASSERT_EQ(cut.size, cut_size(g, cut.side));
    if (n <= 22) {
      ASSERT_LE(cut.size, maxcut_exact(g).size);
    }
  }
  EXPECT_EQ(maxcut_edwards(complete(3)).size, 2);
  EXPECT_EQ(maxcut_edwards(complete(2)).size, 1);
  EXPECT_EQ(maxcut_edwards(SimpleGraph(4)).size, 0);
}

TEST(MaxCutEdwards, LocalSearchPathOnLargeComponents) {
  MaxCutOptions opts;
  opts.edwards_exact_below = 0;  // force greedy + switching everywhere
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    SimpleGraph g = random_simple(std::uniform_int_distribution<int>(2, 30)(rng), 0.5, rng);
    auto cut = maxcut_edwards(g, opts);
    ASSERT_TRUE(edwards_bound(g.m()).met_by(cut.size));
  }
  for (int n = 3; n <= 31; n += 2) EXPECT_TRUE(edwards_bound(n * (n - 1) / 2).met_by(maxcut_edwards(complete(n), opts).size));
}

TEST(MaxCutEdwards, OddCompleteGraphsMeetBoundWithEquality) {
  for (int n = 3; n <= 15; n += 2) {
    std::int64_t m = n * (n - 1) / 2;
    int c = maxcut_exact(complete(n)).size;
    // Equality: 8c + 1 - 4m squared equals 8m + 1.
    std::int64_t s = 8 * c + 1 - 4 * m;
    EXPECT_EQ(s * s, 8 * m + 1) << n;
  }
}

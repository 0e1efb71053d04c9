#include <gtest/gtest.h>

#include <cmath>

#include "conecross/bounds.hpp"

using namespace conecross;

TEST(SqrtHalfConeBound, Examples) {
  EXPECT_TRUE(thm12_check(2, 3));
  EXPECT_FALSE(thm12_check(2, 2));
  EXPECT_TRUE(thm12_check(0, 0));
  EXPECT_TRUE(thm12_check(8, 10));
  EXPECT_FALSE(thm12_check(8, 9));
  EXPECT_FALSE(thm12_check(5, 4));
  EXPECT_THROW(thm12_check(-1, 0), std::invalid_argument);
}

TEST(SqrtHalfConeBound, ThresholdIsSmallestAdmissible) {
  for (std::int64_t k = 0; k <= 5000; ++k) {
    auto t = thm12_threshold(k);
    ASSERT_TRUE(thm12_check(k, t)) << k;
    if (t > 0) {
      ASSERT_FALSE(thm12_check(k, t - 1)) << k;
    }
    // Agreement with floating point away from equality.
    double exact = k + std::sqrt(k / 2.0);
    if (std::abs(t - exact) > 1e-9) {
      ASSERT_GT(t, exact);
    }
    if (std::abs(t - 1 - exact) > 1e-9) {
      ASSERT_LT(t - 1, exact);
    }
  }
  EXPECT_EQ(thm12_threshold(8), 10);
  EXPECT_EQ(thm12_threshold(1000000), 1000000 + 708);
}

TEST(SmallKConeBound, Examples) {
  EXPECT_EQ(thm41_lower(0), 0);
  EXPECT_EQ(thm41_lower(1), 3);
  EXPECT_EQ(thm41_lower(2), 5);
  EXPECT_EQ(thm41_lower(3), 6);
  EXPECT_EQ(thm41_lower(4), 8);
  EXPECT_EQ(thm41_lower(5), 10);
  EXPECT_EQ(thm41_lower(100), 105);
}

TEST(SmallKConeBound, DominatesSqrtHalfBoundUpToK50) {
  for (std::int64_t k = 0; k <= 50; ++k) EXPECT_GE(thm41_lower(k), thm12_threshold(k)) << k;
}

TEST(SmallKConeBound, SqrtHalfBoundIsLargerFromK51) {
  // k + 5 against k + ceil(sqrt(k/2)): the square-root term exceeds 5 once
  // k/2 > 25. The dominance claim for all k <= 10^6 does not hold.
  EXPECT_EQ(thm12_threshold(50), 55);
  EXPECT_EQ(thm12_threshold(51), 57);
  for (std::int64_t k = 51; k <= 1000000; k += 997) EXPECT_LT(thm41_lower(k), thm12_threshold(k)) << k;
}

TEST(MultigraphUpper, Examples) {
  EXPECT_TRUE(multigraph_upper_check(12, 18));
  EXPECT_FALSE(multigraph_upper_check(12, 19));
  EXPECT_EQ(multigraph_upper(12), 18);
  EXPECT_EQ(multigraph_upper(3), 6);
  EXPECT_EQ(multigraph_upper(0), 0);
  for (std::int64_t k = 0; k <= 5000; ++k) {
    auto u = multigraph_upper(k);
    ASSERT_TRUE(multigraph_upper_check(k, u));
    ASSERT_FALSE(multigraph_upper_check(k, u + 1));
  }
}

TEST(MultigraphFamily, Points) {
  EXPECT_EQ(multigraph_family_point(1), (std::pair<std::int64_t, std::int64_t>(3, 6)));
  EXPECT_EQ(multigraph_family_point(2), (std::pair<std::int64_t, std::int64_t>(12, 18)));
  EXPECT_THROW(multigraph_family_point(0), std::invalid_argument);
  // 3r^2 + 3r = k + sqrt(3k) exactly with k = 3r^2.
  for (std::int64_t r = 1; r <= 1000; ++r) {
    auto [k, c] = multigraph_family_point(r);
    ASSERT_EQ(multigraph_upper(k), c);
    ASSERT_TRUE(thm12_check(k, c));
  }
}

TEST(HararyHill, Values) {
  const std::int64_t expected[] = {0, 0, 0, 0, 1, 3, 9, 18, 36, 60, 100, 150};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(harary_hill(n), expected[n - 1]) << n;
  EXPECT_THROW(harary_hill(0), std::invalid_argument);
  EXPECT_EQ(harary_hill_index(10), 8);
  EXPECT_EQ(harary_hill_index(9), 7);
  EXPECT_EQ(harary_hill_index(1), 5);
}

TEST(HHPhiUpper, Examples) {
  auto h10 = hh_phi_upper(10);
  EXPECT_EQ(std::make_tuple(h10.n, h10.n1, h10.crG, h10.crCG, h10.phi_upper), std::make_tuple(8, 5, 10, 21, 11));
  EXPECT_TRUE(h10.conditional);
  // k1 = k case: Z(4) = 0, so k1 = 1 and both indices are 5.
  auto h1 = hh_phi_upper(1);
  EXPECT_EQ(std::make_tuple(h1.n, h1.n1, h1.crG, h1.crCG, h1.phi_upper), std::make_tuple(5, 5, 1, 4, 3));
  // k = Z(n): k1 = Z(n) - Z(n-1).
  auto h18 = hh_phi_upper(18);
  EXPECT_EQ(h18.n, 8);
  EXPECT_EQ(h18.n1, harary_hill_index(18 - 9));
  EXPECT_EQ(h18.crG, 9 + 9);
  EXPECT_THROW(hh_phi_upper(0), std::invalid_argument);
}

TEST(HHPhiUpper, Properties) {
  for (std::int64_t k = 1; k <= 20000; ++k) {
    auto h = hh_phi_upper(k);
    ASSERT_LT(harary_hill(h.n - 1), k);
    ASSERT_LE(k, harary_hill(h.n));
    ASSERT_GE(h.crG, k);
    ASSERT_GT(h.phi_upper, 0);
  }
}

TEST(ConjectureRatio, Fixtures) {
  EXPECT_NEAR(conjecture_ratio(10), 1.383177, 1e-5);
  EXPECT_NEAR(conjecture_ratio(1000), 1.284362, 1e-5);
  EXPECT_NEAR(conjecture_ratio(10000), 1.279156, 1e-5);
  EXPECT_NEAR(conjecture_ratio(100000), 1.163755, 1e-5);
  EXPECT_NEAR(conjecture_ratio(1000000), 1.074632, 1e-5);
  EXPECT_NEAR(conjecture_ratio(10000000), 1.012857, 1e-5);
  EXPECT_NEAR(conjecture_ratio(100000000), 1.055360, 1e-5);
}

TEST(ConjectureRatio, NonDivergentTrend) {
  for (std::int64_t k = 1000; k <= 100000000; k = k * 3 / 2) {
    double r = conjecture_ratio(k);
    ASSERT_GT(r, 0.9) << k;
    ASSERT_LT(r, 1.5) << k;
  }
  double r = conjecture_ratio(1000000);
  EXPECT_GT(r, 0.9);
  EXPECT_LT(r, 1.4);
}

TEST(FsKnown, Values) {
  EXPECT_EQ(fs_known(1), 3);
  EXPECT_EQ(fs_known(2), 5);
  EXPECT_EQ(fs_known(3), 6);
  EXPECT_EQ(fs_known(4), 8);
  EXPECT_EQ(fs_known(5), 10);
  EXPECT_FALSE(fs_known(6).has_value());
  EXPECT_FALSE(fs_known(0).has_value());
  for (std::int64_t k = 1; k <= 5; ++k) {
    EXPECT_EQ(*fs_known(k), thm41_lower(k));
    EXPECT_TRUE(thm12_check(k, *fs_known(k)));
  }
}

TEST(BoundReport, Rows) {
  auto rows = bound_report(10);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0].bound, "thm12_lower");
  EXPECT_EQ(rows[0].value, 13);
  EXPECT_EQ(rows[1].value, 15);
  EXPECT_EQ(rows[2].value, 15);
  EXPECT_EQ(rows.back().bound, "hh_phi_upper");
  EXPECT_EQ(rows.back().value, 11);
  EXPECT_TRUE(rows.back().conditional);
  EXPECT_EQ(bound_report(3).size(), 9u);
  EXPECT_EQ(bound_report(0).size(), 3u);
}

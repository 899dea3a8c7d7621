#include <gyqs/optimizer.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

using namespace gyqs;

TEST(DiscreteOptimum, SampleSizeFive) {
  const auto c = discrete_optimum(5, CostMeasure::comparisons);
  EXPECT_EQ(c.front().t, (PivotParams::Triple{1, 1, 1}));
  EXPECT_NEAR(c.front().value.to_double(), 1.7043, 5e-5);
  const auto s = discrete_optimum(5, CostMeasure::swaps);
  EXPECT_EQ(s.front().t, (PivotParams::Triple{0, 3, 0}));
  EXPECT_NEAR(s.front().value.to_double(), 0.3926, 5e-5);
  EXPECT_EQ(discrete_optimum(5, CostMeasure::bytecodes).front().t, (PivotParams::Triple{0, 1, 2}));
}

TEST(DiscreteOptimum, SampleSizeEight) {
  EXPECT_EQ(discrete_optimum(8, CostMeasure::comparisons).front().t, (PivotParams::Triple{3, 1, 2}));
}

TEST(DiscreteOptimum, RankedAndExhaustive) {
  for (int k = 2; k <= 12; ++k)
    for (CostMeasure m : all_measures) {
      const auto c = discrete_optimum(k, m);
      ASSERT_EQ(c.size(), static_cast<std::size_t>(k * (k - 1) / 2));
      for (std::size_t i = 1; i < c.size(); ++i) {
        ASSERT_LE(c[i - 1].value, c[i].value);
        if (c[i - 1].value == c[i].value) {
          ASSERT_LT(c[i - 1].t, c[i].t);
        }
      }
      for (const auto& x : c) ASSERT_EQ(x.value, leading_term(x.t, m));
    }
}

TEST(DiscreteOptimum, ExtremePointLaw) {
  for (int k = 2; k <= 12; ++k) {
    EXPECT_EQ(min_coefficient_triple(k, CostMeasure::comparisons), (PivotParams::Triple{k - 2, 0, 0}));
    EXPECT_EQ(min_coefficient_triple(k, CostMeasure::swaps), (PivotParams::Triple{0, k - 2, 0}));
    EXPECT_EQ(min_coefficient_triple(k, CostMeasure::bytecodes), (PivotParams::Triple{0, 0, k - 2}));
  }
}

TEST(DiscreteOptimum, ApproachesContinuousOptimum) {
  const auto best = discrete_optimum(50, CostMeasure::comparisons).front().t;
  const ContinuousOptimum c = continuous_optimum(CostMeasure::comparisons);
  const auto tau = c.argument.as_array();
  for (int l = 0; l < 3; ++l) EXPECT_LT(std::abs(best[l] / 50.0 - tau[l]), 0.06);
}

TEST(RelativeTable, BaselineIsZero) {
  for (const auto& c : relative_table({2, 2, 2}))
    if (c.t == PivotParams::Triple{2, 2, 2}) {
      EXPECT_EQ(c.inverse_entropy_pct, 0.0);
      EXPECT_EQ(c.coefficient_pct, 0.0);
      EXPECT_EQ(c.ratio_pct, 0.0);
    }
  EXPECT_THROW(relative_table(7, {2, 2, 2}), std::invalid_argument);
}

TEST(RelativeTable, TertilesOfEightDeltas) {
  const auto table = relative_table(8, {2, 2, 2});
  EXPECT_EQ(table.size(), 28u);
  auto cell = [&](PivotParams::Triple t) {
    return *std::find_if(table.begin(), table.end(), [&](const RelativeCell& c) { return c.t == t; });
  };
  EXPECT_NEAR(cell({3, 1, 2}).ratio_pct, -1.08, 0.005);
  EXPECT_NEAR(cell({0, 0, 6}).inverse_entropy_pct, 68.7, 0.05);
  EXPECT_NEAR(cell({0, 6, 0}).ratio_pct, 94.0, 0.05);
  for (const auto& c : table) EXPECT_GE(c.ratio_pct, cell({3, 1, 2}).ratio_pct);
}

TEST(ContinuousOptimum, Comparisons) {
  const ContinuousOptimum c = continuous_optimum(CostMeasure::comparisons);
  EXPECT_NEAR(c.argument.t1, 0.428846, 1e-3);
  EXPECT_NEAR(c.argument.t2, 0.268774, 1e-3);
  EXPECT_NEAR(c.argument.t3, 0.302380, 1e-3);
  EXPECT_NEAR(c.value, 1.4931, 5e-4);
  EXPECT_FALSE(c.boundary);
  EXPECT_DOUBLE_EQ(c.value, continuous_ratio(c.argument, CostMeasure::comparisons));
}

TEST(ContinuousOptimum, Bytecodes) {
  const ContinuousOptimum c = continuous_optimum(CostMeasure::bytecodes);
  EXPECT_NEAR(c.argument.t1, 0.206772, 1e-3);
  EXPECT_NEAR(c.argument.t2, 0.348562, 1e-3);
  EXPECT_NEAR(c.argument.t3, 0.444666, 1e-3);
  EXPECT_NEAR(c.value, 16.3833, 5e-4);
  EXPECT_FALSE(c.boundary);
}

TEST(ContinuousOptimum, SwapsOnBoundary) {
  const ContinuousOptimum c = continuous_optimum(CostMeasure::swaps);
  EXPECT_TRUE(c.boundary);
  EXPECT_LT(c.value, 1e-4);
  const bool at_vertex = (c.argument.t2 > 1 - 1e-6) || (c.argument.t3 > 1 - 1e-6);
  EXPECT_TRUE(at_vertex);
}

TEST(Simplex, ProjectionStaysInside) {
  for (auto p : {detail::Point2{1.5, 0.2}, {-0.3, 0.4}, {0.6, 0.6}, {0.2, 0.3}}) {
    const auto q = detail::project_to_simplex(p);
    EXPECT_GE(q[0], 0.0);
    EXPECT_GE(q[1], 0.0);
    EXPECT_LE(q[0] + q[1], 1.0 + 1e-12);
  }
  const auto inside = detail::project_to_simplex({0.2, 0.3});
  EXPECT_DOUBLE_EQ(inside[0], 0.2);
  EXPECT_NEAR(inside[1], 0.3, 1e-15);
}

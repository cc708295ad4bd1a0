#include <gtest/gtest.h>

#include "braess/oracle.hpp"
#include "braess/piecewise.hpp"
#include "fixtures.hpp"

using namespace braess;
using braess::testing::ConfigGen;

namespace {

// Line through two oracle evaluations strictly inside (lo, hi).
Line oracle_line(const FourNodeConfig& c, bool bc, double lo, double hi) {
  const double x0 = lo + 0.25 * (hi - lo);
  const double x1 = lo + 0.75 * (hi - lo);
  const double y0 = oracle::beckmann_solve(c, bc, x0).travel_time;
  const double y1 = oracle::beckmann_solve(c, bc, x1).travel_time;
  const double slope = (y1 - y0) / (x1 - x0);
  return {y0 - slope * x0, slope};
}

}  // namespace

TEST(Piecewise, WorkedExampleWithoutBridge) {
  const auto c = braess::testing::worked_example();
  const auto fn = piecewise_equilibrium(c, false, 10.0);
  ASSERT_EQ(fn.segments().size(), 2u);
  EXPECT_NEAR(fn.breakpoints()[0], 4.0 / 62.0, 1e-12);
  EXPECT_EQ(fn.segments()[0].line.intercept, 38);
  EXPECT_EQ(fn.segments()[0].line.slope, 62);
  EXPECT_NEAR(fn.segments()[1].line.intercept, 40.79, 5e-3);
  EXPECT_NEAR(fn.segments()[1].line.slope, 18.81, 5e-3);
  const Line o = oracle_line(c, false, 1.0, 10.0);
  EXPECT_NEAR(fn.segments()[1].line.intercept, o.intercept, 1e-9);
  EXPECT_NEAR(fn.segments()[1].line.slope, o.slope, 1e-9);
}

TEST(Piecewise, WorkedExampleWithBridge) {
  const auto c = braess::testing::worked_example();
  const auto fn = piecewise_equilibrium(c, true, 10.0);
  const auto& seg = fn.segments();
  ASSERT_EQ(seg.size(), 4u);
  const auto bp = fn.breakpoints();
  ASSERT_EQ(bp.size(), 3u);
  EXPECT_NEAR(bp[0], 0.97, 5e-3);
  EXPECT_NEAR(bp[1], 1052.0 / 803.0, 1e-12);
  EXPECT_NEAR(bp[2], 2696.0 / 314.0, 1e-12);
  const std::array<std::pair<double, double>, 4> shown{{{10, 52}, {35.76, 25.44}, {45.10, 18.31}, {40.79, 18.81}}};
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(seg[i].line.intercept, shown[i].first, 5e-3) << i;
    EXPECT_NEAR(seg[i].line.slope, shown[i].second, 5e-3) << i;
    const double hi = std::isinf(seg[i].hi) ? seg[i].lo + 10.0 : seg[i].hi;
    const Line o = oracle_line(c, true, seg[i].lo, hi);
    EXPECT_NEAR(seg[i].line.intercept, o.intercept, 1e-9 * (1 + std::abs(o.intercept))) << i;
    EXPECT_NEAR(seg[i].line.slope, o.slope, 1e-9 * (1 + std::abs(o.slope))) << i;
  }
}

TEST(Piecewise, AsymmetricIsOneLine) {
  const auto c = braess::testing::asymmetric();
  for (bool bc : {false, true}) {
    const auto fn = piecewise_equilibrium(c, bc, 100.0);
    ASSERT_EQ(fn.segments().size(), 1u);
    EXPECT_DOUBLE_EQ(fn.segments()[0].line.intercept, 3.0);
    EXPECT_DOUBLE_EQ(fn.segments()[0].line.slope, 3.5);
  }
}

TEST(Piecewise, ContinuousAndNondecreasing) {
  ConfigGen gen(41);
  for (int i = 0; i < 2000; ++i) {
    const auto c = i % 2 ? gen.strict() : gen.integral();
    for (bool bc : {false, true}) {
      const auto fn = piecewise_equilibrium(c, bc, 1e3);
      ASSERT_TRUE(fn.is_continuous(1e-9)) << i;
      ASSERT_TRUE(fn.is_nondecreasing(1e-9)) << i;
      const auto& seg = fn.segments();
      ASSERT_EQ(seg.front().lo, 0.0);
      for (std::size_t k = 1; k < seg.size(); ++k) ASSERT_EQ(seg[k].lo, seg[k - 1].hi);
    }
  }
}

TEST(Piecewise, AgreesWithOracle) {
  ConfigGen gen(42);
  for (int i = 0; i < 300; ++i) {
    const auto c = gen.strict();
    const auto fn = piecewise_equilibrium(c, true, 200.0);
    for (int k = 0; k < 5; ++k) {
      const double q = gen.log_uniform(0.01, 200.0);
      const double t = oracle::beckmann_solve(c, true, q).travel_time;
      ASSERT_NEAR(fn(q), t, 1e-9 * (1 + t));
    }
  }
}

TEST(Piecewise, SegmentLookup) {
  const auto fn = piecewise_equilibrium(braess::testing::worked_example(), false, 10.0);
  EXPECT_THROW(fn.segment_at(0.0), std::out_of_range);
  EXPECT_EQ(fn.segment_at(4.0 / 62.0).label, CaseLabel::NB);
  EXPECT_EQ(fn.segment_at(1.0).label, CaseLabel::NC);
}

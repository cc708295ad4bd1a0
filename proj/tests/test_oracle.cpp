#include <gtest/gtest.h>

#include "braess/equilibrium.hpp"
#include "braess/errors.hpp"
#include "braess/oracle.hpp"
#include "fixtures.hpp"

using namespace braess;
using namespace braess::oracle;
using braess::testing::ConfigGen;

TEST(Oracle, WorkedExampleAllPathsUsed) {
  const auto c = braess::testing::worked_example();
  const auto o = beckmann_solve(c, true, 5.0);
  const auto s = equilibrium_nplus(c, 5.0);
  EXPECT_EQ(o.method, Method::ActiveSet);
  EXPECT_EQ(o.support, (std::array<bool, 3>{true, true, true}));
  EXPECT_NEAR(o.flows.p1, s.paths.p1, 1e-6);
  EXPECT_NEAR(o.flows.p2, s.paths.p2, 1e-6);
  EXPECT_NEAR(o.flows.p3, s.paths.p3, 1e-6);
}

TEST(Oracle, AllOnesSplitsEvenly) {
  const auto o = beckmann_solve(braess::testing::all_ones(), true, 2.0);
  EXPECT_EQ(o.support, (std::array<bool, 3>{true, true, false}));
  EXPECT_NEAR(o.flows.p1, 1.0, 1e-12);
  EXPECT_NEAR(o.flows.p2, 1.0, 1e-12);
  // Each used path: two links at time 1 + 1 * 1.
  EXPECT_NEAR(o.travel_time, 4.0, 1e-12);
}

TEST(Oracle, AsymmetricSplitsEvenly) {
  const auto c = braess::testing::asymmetric();
  for (double q : {0.1, 1.0, 13.0}) {
    const auto o = beckmann_solve(c, true, q);
    EXPECT_NEAR(o.flows.p1, q / 2, 1e-9);
    EXPECT_NEAR(o.flows.p2, q / 2, 1e-9);
    EXPECT_NEAR(o.flows.p3, 0.0, 1e-9);
    EXPECT_NEAR(o.travel_time, 3 + 3.5 * q, 1e-9);
  }
}

TEST(Oracle, ActiveSetNeedsPositiveDelays) {
  EXPECT_THROW(solve_active_set(braess::testing::zero_delay(), true, 100.0), InvalidConfig);
  EXPECT_EQ(beckmann_solve(braess::testing::zero_delay(), true, 100.0).method, Method::Grid);
}

TEST(Oracle, MethodsAgree) {
  ConfigGen gen(61);
  for (int i = 0; i < 200; ++i) {
    const auto c = gen.strict();
    const double q = gen.log_uniform(0.01, 50.0);
    for (bool bc : {false, true}) {
      const auto a = solve_active_set(c, bc, q);
      const auto g = solve_grid(c, bc, q);
      ASSERT_NEAR(a.travel_time, g.travel_time, 1e-6 * (1 + std::abs(a.travel_time))) << i;
      ASSERT_LE(a.potential, g.potential + 1e-9 * (1 + std::abs(g.potential)));
    }
  }
}

TEST(Oracle, SolutionsAreWardrop) {
  ConfigGen gen(62);
  for (int i = 0; i < 500; ++i) {
    const auto c = gen.strict();
    const double q = gen.log_uniform(0.01, 100.0);
    for (bool bc : {false, true}) {
      const auto o = beckmann_solve(c, bc, q);
      const auto w = verify_wardrop(c, bc, q, o.flows, 1e-8);
      ASSERT_TRUE(w.passed) << i << " spread " << w.used_spread << " shortfall " << w.unused_shortfall;
    }
  }
}

TEST(Oracle, EquilibriumNoBetterThanSystemOptimum) {
  ConfigGen gen(63);
  for (int i = 0; i < 500; ++i) {
    const auto c = gen.strict();
    const double q = gen.log_uniform(0.01, 100.0);
    const double eq = beckmann_solve(c, true, q).travel_time;
    const double so = system_optimum(c, true, q).travel_time;
    ASSERT_GE(eq, so - 1e-9 * (1 + so)) << i;
  }
}

TEST(VerifyWardrop, Examples) {
  const auto c = braess::testing::worked_example();
  const auto s = equilibrium_nplus(c, 5.0);
  EXPECT_TRUE(verify_wardrop(c, true, 5.0, s.paths).passed);

  // Everything on P1 (f = Q, g = 0).
  const auto w = verify_wardrop(c, true, 5.0, {5.0, 0.0, 0.0});
  EXPECT_FALSE(w.passed);
  EXPECT_GT(w.unused_shortfall, 0.0);

  EXPECT_THROW(verify_wardrop(c, true, 1.0, {0.5, 0.4, 0.0}), InfeasibleFlows);
  EXPECT_THROW(verify_wardrop(c, true, 1.0, {1.5, -0.5, 0.0}), InfeasibleFlows);
}

TEST(ScanParadox, WorkedExample) {
  const auto runs = scan_paradox(braess::testing::worked_example(), 0.1, 20.0, 2000);
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_NEAR(runs[0].lo, 0.93, 1e-2);
  EXPECT_NEAR(runs[0].hi, 8.59, 1e-2);
  EXPECT_FALSE(runs[0].open_below);
  EXPECT_FALSE(runs[0].open_above);
}

TEST(ScanParadox, AsymmetricHasNoRuns) {
  EXPECT_TRUE(scan_paradox(braess::testing::asymmetric(), 0.1, 100.0, 500).empty());
}

TEST(ScanParadox, ZeroDelayExampleWithGrid) {
  const auto runs = scan_paradox(braess::testing::zero_delay(), 100.0, 2000.0, 2000);
  ASSERT_EQ(runs.size(), 1u);
  EXPECT_NEAR(runs[0].lo, 500.0, 1.0);
  EXPECT_NEAR(runs[0].hi, 1500.0, 1.0);
}

#include <gtest/gtest.h>

#include "braess/oracle.hpp"
#include "braess/paradox.hpp"
#include "fixtures.hpp"

using namespace braess;
using braess::testing::ConfigGen;

namespace {

// Draws configs until one has a nonempty paradox region.
FourNodeConfig with_paradox(ConfigGen& gen) {
  for (;;) {
    const auto c = gen.strict();
    if (!paradox_region(c).region.empty()) return c;
  }
}

double sample_inside(ConfigGen& gen, const Interval& i, double margin) {
  const double lo = i.lo().value() + margin;
  const double hi = i.hi().is_finite() ? i.hi().value() - margin : lo + 100.0;
  return gen.uniform(lo, std::max(lo, hi));
}

}  // namespace

TEST(Properties, RegionIsExactlyWhereTheBridgeHurts) {
  ConfigGen gen(51);
  int violations = 0;
  for (int i = 0; i < 500; ++i) {
    const auto c = gen.strict();
    const auto r = paradox_region(c);
    for (int k = 0; k < 200; ++k) {
      const double q = gen.log_uniform(1e-3, 1e3);
      const bool near_edge = std::any_of(r.region.begin(), r.region.end(), [&](const Interval& in) {
        return std::abs(q - in.lo().value()) < 1e-6 || (in.hi().is_finite() && std::abs(q - in.hi().value()) < 1e-6);
      });
      if (near_edge) continue;
      if ((classify(c, q).outcome == Outcome::Paradox) != r.in_region(q)) ++violations;
    }
  }
  EXPECT_EQ(violations, 0);
}

TEST(Properties, ParadoxOnlyInAdmissibleCasePairs) {
  ConfigGen gen(52);
  for (int i = 0; i < 1000; ++i) {
    const auto c = gen.strict();
    for (int k = 0; k < 20; ++k) {
      const auto k1 = classify(c, gen.log_uniform(1e-2, 1e2));
      if (k1.outcome != Outcome::Paradox) continue;
      ASSERT_EQ(k1.n.label, CaseLabel::NC);
      ASSERT_TRUE(paradox_case_of(k1.nplus.label).has_value()) << to_string(k1.nplus.label);
      ASSERT_TRUE(k1.case_pair_admissible);
    }
  }
}

TEST(Properties, TheoremsThreeAndFourExclusive) {
  ConfigGen gen(53);
  for (int i = 0; i < 20000; ++i) {
    const auto c = i % 2 ? gen.strict() : gen.integral();
    const auto r = paradox_region(c);
    ASSERT_FALSE(!r.theorems[2].interval.empty() && !r.theorems[3].interval.empty()) << i;
  }
}

TEST(Properties, TheoremIntervalsAreOrdered) {
  ConfigGen gen(54);
  int seen = 0;
  for (int i = 0; i < 20000; ++i) {
    const auto c = gen.strict();
    const auto r = paradox_region(c);
    const auto& t1 = r.theorems[0].interval;
    const auto& t2 = r.theorems[1].interval;
    const auto& t3 = r.theorems[2].interval;
    if (t1.empty() || t2.empty() || t3.empty()) continue;
    ++seen;
    const double eps = 1e-9 * (1 + t3.lo().value());
    ASSERT_LE(t2.hi().value(), t3.lo().value() + eps);
    ASSERT_LE(t3.hi().value(), t1.lo().value() + eps);
  }
  EXPECT_GT(seen, 0);
}

TEST(Properties, AsymmetricPatternNeverParadoxical) {
  ConfigGen gen(55);
  for (int i = 0; i < 500; ++i) {
    const auto c = gen.a_pattern();
    ASSERT_TRUE(is_asymmetric_pattern(c));
    const auto r = paradox_region(c);
    ASSERT_TRUE(r.region.empty());
    ASSERT_EQ(r.pseudo_region.size(), 1u);
    ASSERT_EQ(r.pseudo_region[0], Interval::open(0.0, ExtendedReal::pos_inf()));
  }
}

TEST(Properties, PseudoRegionIsSound) {
  ConfigGen gen(56);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto c = gen.strict();
    const auto r = paradox_region(c);
    for (const auto& in : r.pseudo_region) {
      for (int k = 0; k < 10; ++k) {
        const double q = sample_inside(gen, in, 1e-6 * (1 + in.lo().value()));
        if (!in.contains(q)) continue;
        ASSERT_EQ(classify(c, q).outcome, Outcome::Equal) << i << " q=" << q;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(Properties, ParadoxRegionMatchesOracle) {
  ConfigGen gen(57);
  for (int i = 0; i < 100; ++i) {
    const auto c = with_paradox(gen);
    const auto r = paradox_region(c);
    const auto& in = r.region.front();
    const double q = sample_inside(gen, in, 1e-6 * (1 + in.lo().value()));
    if (!in.contains(q)) continue;
    ASSERT_TRUE(oracle::oracle_paradox_at(c, q)) << i;
  }
}

TEST(Properties, SymmetricClosedFormsMatchGeneral) {
  ConfigGen gen(58);
  for (int i = 0; i < 300; ++i) {
    const auto m = gen.m_pattern();
    ASSERT_EQ(detect_symmetry(m), SymmetryPattern::M);
    ASSERT_TRUE(symmetric_analysis(m).agrees) << i;
    const auto s = gen.s_pattern();
    ASSERT_TRUE(detect_symmetry(s).has_value());
    const auto rep = symmetric_analysis(s);
    ASSERT_TRUE(rep.agrees) << i;
    if (s.b(1) <= s.b(2)) ASSERT_TRUE(rep.general.empty());
  }
}

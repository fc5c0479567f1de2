// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fairloc/oracle.h"

#include <cmath>

#include <gtest/gtest.h>

#include "fairloc/errors.h"
#include "fairloc/families.h"
#include "test_util.h"

namespace fairloc {
namespace {

using Spec = ObjectiveSpec;

TEST(BreakpointsTest, Examples) {
  const std::vector<double> b = Breakpoints(MajorityGroupTightProfile());
  const std::vector<double> want{0, 1.0 / 3, 2.0 / 3, 5.0 / 6, 1};
  ASSERT_EQ(b.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(b[i], want[i], 1e-12);
  EXPECT_EQ(Breakpoints(ProfileFromGroups({{4}})), (std::vector<double>{4}));
  const std::vector<double> two = Breakpoints(TwoSingletons(0, 1));
  EXPECT_EQ(two.front(), 0);
  EXPECT_EQ(two.back(), 1);
  EXPECT_TRUE(std::is_sorted(two.begin(), two.end()));
}

TEST(OptimizeTest, Examples) {
  OptimalResult r = Optimize(MajorityGroupTightProfile(), Spec::Mtgc());
  EXPECT_NEAR(r.location, 2.0 / 3, 1e-9);
  EXPECT_NEAR(r.value, 2.0 / 3, 1e-9);
  r = Optimize(MedianCounterexample(3), Spec::Mtgc());
  EXPECT_NEAR(r.location, 1, 1e-9);
  EXPECT_NEAR(r.value, 1, 1e-9);
  r = Optimize(TwoSingletons(0, 0.5), Spec::Mtgc());
  EXPECT_NEAR(r.location, 0.25, 1e-9);
  EXPECT_NEAR(r.value, 0.25, 1e-9);
  r = Optimize(HeavyClusterFamily(50), Spec::Magc());
  EXPECT_NEAR(r.location, 199.0 / 300, 1e-9);
  EXPECT_NEAR(r.value, 101.0 / 300, 1e-9);
}

TEST(OptimizeTest, ReturnsLeftmostMinimizer) {
  // A single group {0, 1}: mtgc is flat at 1 on [0, 1].
  const OptimalResult r = Optimize(ProfileFromGroups({{0, 1}}), Spec::Mtgc());
  EXPECT_EQ(r.location, 0);
  EXPECT_DOUBLE_EQ(r.value, 1);
  EXPECT_GE(r.minimizers.size(), 2u);
  for (double y : r.minimizers) {
    EXPECT_NEAR(EvalPoint(ProfileFromGroups({{0, 1}}), Spec::Mtgc(), y), 1,
                1e-9);
  }
}

TEST(OptimizeTest, CoincidentGroupsHaveRatioOne) {
  // Both groups cost 0 at the shared point, and 0/0 counts as equality.
  const OptimalResult r =
      Optimize(ProfileFromGroups({{2}, {2}}), Spec::Ratio(GroupCostMeasure::kMax));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.location, 2);
}

TEST(OptimizeTest, AlternativeFormsSearchOutsideTheSpan) {
  // G1 {0, 0}, G2 {1}: totals 2|y| and |1 - y| are equal at y = 1/3 and at
  // y = -1. The leftmost minimizer of the difference lies outside the span.
  const GroupedProfile p = ProfileFromGroups({{0, 0}, {1}});
  const OptimalResult r =
      Optimize(p, Spec::Difference(GroupCostMeasure::kTotal));
  EXPECT_EQ(r.value, 0);
  EXPECT_NEAR(r.location, -1, 1e-9);
}

TEST(OptimizeTest, RatioFormInfimumAtInfinity) {
  // G1 {0, 1}, G2 {1/2}: the max costs are |y - 1/2| + 1/2 and |y - 1/2|,
  // so their ratio exceeds 1 everywhere and tends to 1 on both rays.
  const GroupedProfile p = ProfileFromGroups({{0, 1}, {0.5}});
  const OptimalResult r = Optimize(p, Spec::Ratio(GroupCostMeasure::kMax));
  EXPECT_EQ(r.value, 1);
  EXPECT_EQ(r.location, -kInfinity);
  EXPECT_EQ(r.minimizers, (std::vector<double>{-kInfinity, kInfinity}));
  // Totals 2|y - 1/2| (outside [0, 1]) and |y - 1/2| give exactly 2 on the
  // rays, which is also attained at x_1.
  const OptimalResult total = Optimize(p, Spec::Ratio(GroupCostMeasure::kTotal));
  EXPECT_EQ(total.value, 2);
  EXPECT_EQ(total.location, 0);
}

TEST(GridOptimizeTest, Examples) {
  const OptimalResult r =
      GridOptimize(MajorityGroupTightProfile(), Spec::Mtgc(), 1000000);
  EXPECT_NEAR(r.value, 2.0 / 3, 1e-5);
  const OptimalResult single =
      GridOptimize(ProfileFromGroups({{3}}), Spec::Magc(), 10);
  EXPECT_EQ(single.value, 0);
  EXPECT_EQ(single.location, 3);
  EXPECT_THROW(GridOptimize(TwoSingletons(0, 1), Spec::Mtgc(), 1), Error);
}

TEST(RatioTest, Examples) {
  EXPECT_NEAR(Ratio(MajorityGroupTightProfile(),
                    MechanismId{MechanismKind::kMajorityGroupMedian},
                    Spec::Mtgc())
                  .ratio,
              3, 1e-9);
  EXPECT_NEAR(Ratio(MedianCounterexample(5), MechanismId{MechanismKind::kMedian},
                    Spec::Mtgc())
                  .ratio,
              5, 1e-9);
  const Mechanism midpoint = [](const GroupedProfile& p) {
    return FacilityOutcome::Deterministic((p.leftmost() + p.rightmost()) / 2);
  };
  const RatioReport r = Ratio(TwoSingletons(0, 1), midpoint,
                              Spec::Difference(GroupCostMeasure::kTotal));
  EXPECT_EQ(r.mechanism_value, 0);
  EXPECT_EQ(r.optimal.value, 0);
  EXPECT_EQ(r.ratio, 1);
}

TEST(RatioOfTest, ZeroOptimumConvention) {
  EXPECT_EQ(RatioOf(0, 0), 1);
  EXPECT_EQ(RatioOf(1e-10, 0), 1);
  EXPECT_EQ(RatioOf(0.5, 0), kInfinity);
  EXPECT_EQ(RatioOf(kInfinity, 1), kInfinity);
  EXPECT_DOUBLE_EQ(RatioOf(3, 2), 1.5);
}

TEST(OraclePropertyTest, ExactNeverWorseThanGrid) {
  testing::ProfileGenerator gen(41, 10, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    for (const Spec& s : MainObjectives()) {
      const OptimalResult exact = Optimize(p, s);
      EXPECT_NEAR(EvalPoint(p, s, exact.location), exact.value, 1e-9);
      double previous = kInfinity;
      for (int res = 17; res <= 1025; res = 2 * res - 1) {
        // Nested grids: each doubling keeps every old point.
        const OptimalResult grid = GridOptimize(p, s, res);
        EXPECT_LE(exact.value, grid.value + 1e-9) << s.Name();
        EXPECT_LE(grid.value, previous + 1e-12) << s.Name();
        previous = grid.value;
      }
    }
  }
}

TEST(OraclePropertyTest, ExactBeatsDenseSamplingEverywhere) {
  testing::ProfileGenerator gen(42, 8, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    std::vector<Spec> specs = MainObjectives();
    for (const Spec& s : AlternativeObjectives()) specs.push_back(s);
    for (const Spec& s : specs) {
      OptimalResult exact;
      try {
        exact = Optimize(p, s);
      } catch (const UnboundedError&) {
        continue;
      }
      for (int i = 0; i <= 400; ++i) {
        const double y = -1.5 + 4.0 * i / 400;
        EXPECT_LE(exact.value, EvalPoint(p, s, y) + 1e-9)
            << s.Name() << " at " << y;
      }
    }
  }
}

TEST(OraclePropertyTest, ConvexMinimizersFormAnInterval) {
  testing::ProfileGenerator gen(43, 10, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    for (const Spec& s : {Spec::Mtgc(), Spec::Magc()}) {
      const OptimalResult r = Optimize(p, s);
      const double lo = r.minimizers.front();
      const double hi = r.minimizers.back();
      EXPECT_NEAR(EvalPoint(p, s, (lo + hi) / 2), r.value, 1e-9);
    }
  }
}

TEST(OraclePropertyTest, RatioAtLeastOne) {
  testing::ProfileGenerator gen(44, 10, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    for (const auto& [name, mech] : testing::BodyMechanisms()) {
      for (const Spec& s : MainObjectives()) {
        EXPECT_GE(Ratio(p, mech, s).ratio, 1 - 1e-9) << name << " " << s.Name();
      }
    }
  }
}

TEST(OraclePropertyTest, RatioInvariantUnderAffineMaps) {
  testing::ProfileGenerator gen(45, 10, 4);
  for (int trial = 0; trial < 300; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    const double scale = 0.2 + 3 * gen.Location(false);
    const double shift = 4 * gen.Location(false) - 2;
    const GroupedProfile q = p.Transformed(scale, shift);
    for (const auto& [name, mech] : testing::BodyMechanisms()) {
      for (const Spec& s : MainObjectives()) {
        const double a = Ratio(p, mech, s).ratio;
        const double b = Ratio(q, mech, s).ratio;
        if (std::isinf(a) || std::isinf(b)) {
          EXPECT_EQ(a, b);
        } else {
          EXPECT_NEAR(a, b, 1e-6 * a) << name << " " << s.Name();
        }
      }
    }
  }
}

}  // namespace
}  // namespace fairloc

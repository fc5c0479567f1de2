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

#include "fairloc/model.h"

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fairloc/errors.h"
#include "test_util.h"

namespace fairloc {
namespace {

TEST(BuildProfileTest, KeepsTwoAgentBaseCase) {
  const std::vector<Agent> raw{{0, 1}, {1, 2}};
  const GroupedProfile p = BuildProfile(raw, 2);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.agent(0), (Agent{0, 1}));
  EXPECT_EQ(p.agent(1), (Agent{1, 2}));
  EXPECT_EQ(p.group_count(), 2);
}

TEST(BuildProfileTest, SortsByLocation) {
  const std::vector<Agent> raw{{1, 1}, {0, 1}};
  const GroupedProfile p = BuildProfile(raw, 1);
  EXPECT_EQ(p.agent(0).location, 0);
  EXPECT_EQ(p.agent(1).location, 1);
}

TEST(BuildProfileTest, BreaksLocationTiesByGroup) {
  const std::vector<Agent> raw{{0.5, 3}, {0.5, 1}, {0.5, 2}};
  const GroupedProfile p = BuildProfile(raw, 3);
  EXPECT_EQ(p.agent(0).group, 1);
  EXPECT_EQ(p.agent(1).group, 2);
  EXPECT_EQ(p.agent(2).group, 3);
}

TEST(BuildProfileTest, RejectsEmptyGroup) {
  const std::vector<Agent> raw{{0, 1}};
  try {
    BuildProfile(raw, 2);
    FAIL() << "expected EmptyGroupError";
  } catch (const EmptyGroupError& e) {
    EXPECT_EQ(e.group(), 2);
  }
}

TEST(BuildProfileTest, RejectsBadInput) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double inf = std::numeric_limits<double>::infinity();
  EXPECT_THROW(BuildProfile(std::vector<Agent>{{nan, 1}}, 1),
               InvalidLocationError);
  EXPECT_THROW(BuildProfile(std::vector<Agent>{{inf, 1}}, 1),
               InvalidLocationError);
  EXPECT_THROW(BuildProfile(std::vector<Agent>{}, 1), InvalidLocationError);
  EXPECT_THROW(BuildProfile(std::vector<Agent>{{0, 2}}, 1), InvalidGroupError);
  EXPECT_THROW(BuildProfile(std::vector<Agent>{{0, 0}}, 1), InvalidGroupError);
  EXPECT_THROW(BuildProfile(std::vector<Agent>{{0, 1}}, 0), InvalidGroupError);
}

TEST(GroupedProfileTest, GroupLocationsAreSorted) {
  const GroupedProfile p = ProfileFromGroups({{3, 1, 2}, {0}});
  const auto g1 = p.group_locations(1);
  EXPECT_EQ(std::vector<double>(g1.begin(), g1.end()),
            (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(p.group_size(2), 1u);
  EXPECT_THROW(p.group_locations(3), IndexOutOfRangeError);
  EXPECT_EQ(p.leftmost(), 0);
  EXPECT_EQ(p.rightmost(), 3);
  EXPECT_EQ(p.span(), 3);
}

TEST(GroupedProfileTest, WithGroupRefusesToEmptyAGroup) {
  const GroupedProfile p = ProfileFromGroups({{0}, {1, 2}});
  EXPECT_THROW(p.WithGroup(0, 2), EmptyGroupError);
  const GroupedProfile q = p.WithGroup(2, 1);
  EXPECT_EQ(q.group_size(1), 2u);
}

TEST(GroupedProfileTest, NormalizeMapsOntoUnitInterval) {
  const GroupedProfile p = ProfileFromGroups({{-2, 2}, {0}});
  const GroupedProfile q = NormalizeToUnitInterval(p);
  EXPECT_EQ(q.leftmost(), 0);
  EXPECT_EQ(q.rightmost(), 1);
  EXPECT_DOUBLE_EQ(q.group_locations(2)[0], 0.5);
  const GroupedProfile point = ProfileFromGroups({{4, 4}});
  EXPECT_EQ(NormalizeToUnitInterval(point).rightmost(), 0);
}

TEST(FacilityOutcomeTest, LotteryValidation) {
  EXPECT_THROW(FacilityOutcome::Lottery({}), InvalidOutcomeError);
  EXPECT_THROW(FacilityOutcome::Lottery({{0, 0.5}}), InvalidOutcomeError);
  EXPECT_THROW(FacilityOutcome::Lottery({{0, 0.0}, {1, 1.0}}),
               InvalidOutcomeError);
  EXPECT_THROW(FacilityOutcome::Lottery({{0, 1.5}, {1, -0.5}}),
               InvalidOutcomeError);
  EXPECT_THROW(FacilityOutcome::Deterministic(
                   std::numeric_limits<double>::infinity()),
               InvalidOutcomeError);
}

TEST(FacilityOutcomeTest, MergesRepeatedPointsAndSorts) {
  const FacilityOutcome o =
      FacilityOutcome::Lottery({{1, 0.25}, {0, 0.25}, {1, 0.5}});
  ASSERT_EQ(o.support().size(), 2u);
  EXPECT_EQ(o.support()[0], (SupportPoint{0, 0.25}));
  EXPECT_EQ(o.support()[1], (SupportPoint{1, 0.75}));
  const FacilityOutcome c =
      FacilityOutcome::Lottery({{3, 0.25}, {3, 0.5}, {3, 0.25}});
  EXPECT_TRUE(c.is_deterministic());
  EXPECT_EQ(c, FacilityOutcome::Deterministic(3));
}

TEST(AgentCostTest, Examples) {
  EXPECT_EQ(AgentCost(FacilityOutcome::Deterministic(0), 0), 0);
  const FacilityOutcome rm =
      FacilityOutcome::Lottery({{0, 0.25}, {1, 0.25}, {0.5, 0.5}});
  EXPECT_DOUBLE_EQ(AgentCost(rm, 0), 0.5);
  const FacilityOutcome sym = FacilityOutcome::Lottery({{0, 0.5}, {2, 0.5}});
  EXPECT_DOUBLE_EQ(AgentCost(sym, 1), 1);
}

TEST(GroupSummaryTest, Examples) {
  const GroupedProfile p = ProfileFromGroups({{0, 2.0 / 3}, {1, 1}, {5}});
  const auto at0 = FacilityOutcome::Deterministic(0);
  const GroupCostSummary g1 = GroupSummary(p, 1, at0);
  EXPECT_DOUBLE_EQ(g1.total, 2.0 / 3);
  EXPECT_DOUBLE_EQ(g1.average, 1.0 / 3);
  EXPECT_DOUBLE_EQ(g1.max, 2.0 / 3);
  EXPECT_DOUBLE_EQ(g1.min, 0);
  const GroupCostSummary g2 = GroupSummary(p, 2, at0);
  EXPECT_EQ(g2.total, 2);
  EXPECT_EQ(g2.average, 1);
  EXPECT_EQ(g2.max, 1);
  EXPECT_EQ(g2.min, 1);
  const GroupCostSummary g3 =
      GroupSummary(p, 3, FacilityOutcome::Deterministic(5));
  EXPECT_EQ(g3.total, 0);
  EXPECT_EQ(g3.average, 0);
  EXPECT_EQ(g3.max, 0);
  EXPECT_EQ(g3.min, 0);
}

FacilityOutcome RandomOutcome(testing::ProfileGenerator& gen) {
  const int k = gen.Uniform(1, 4);
  std::vector<SupportPoint> support;
  double mass = 0;
  for (int i = 0; i < k; ++i) {
    const double w = gen.Uniform(1, 8);
    support.push_back({gen.Location(false) * 4 - 2, w});
    mass += w;
  }
  double total = 0;
  for (auto& s : support) {
    s.probability /= mass;
    total += s.probability;
  }
  support.back().probability += 1.0 - total;
  return FacilityOutcome::Lottery(support);
}

TEST(CostPropertyTest, TranslationAndScaleCovariance) {
  testing::ProfileGenerator gen(11, 10, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const GroupedProfile p = gen.Next(trial % 2 == 0);
    const FacilityOutcome o = RandomOutcome(gen);
    const double shift = gen.Location(false) * 10 - 5;
    const double scale = 0.1 + gen.Location(false) * 5;
    const GroupedProfile q = p.Transformed(scale, shift);
    const FacilityOutcome oq = o.Transformed(scale, shift);
    for (int j = 1; j <= p.group_count(); ++j) {
      const GroupCostSummary a = GroupSummary(p, j, o);
      const GroupCostSummary b = GroupSummary(q, j, oq);
      EXPECT_NEAR(b.total, scale * a.total, 1e-9 * (1 + b.total));
      EXPECT_NEAR(b.max, scale * a.max, 1e-9 * (1 + b.max));
      EXPECT_NEAR(b.min, scale * a.min, 1e-9 * (1 + b.min));
      const GroupCostSummary t = GroupSummary(p.Transformed(1, shift), j,
                                              o.Transformed(1, shift));
      EXPECT_NEAR(t.total, a.total, 1e-9 * (1 + a.total));
    }
  }
}

TEST(CostPropertyTest, LotteryCostIsWeightedAverage) {
  testing::ProfileGenerator gen(12, 6, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const FacilityOutcome o = RandomOutcome(gen);
    const double x = gen.Location(false) * 4 - 2;
    double direct = 0;
    for (const SupportPoint& s : o.support()) {
      direct += s.probability *
                AgentCost(FacilityOutcome::Deterministic(s.point), x);
    }
    EXPECT_NEAR(AgentCost(o, x), direct, 1e-12);
  }
}

TEST(CostPropertyTest, SummaryOrdering) {
  testing::ProfileGenerator gen(13, 10, 4);
  for (int trial = 0; trial < 1000; ++trial) {
    const GroupedProfile p = gen.Next(trial % 3 == 0);
    const FacilityOutcome o = RandomOutcome(gen);
    for (int j = 1; j <= p.group_count(); ++j) {
      const GroupCostSummary s = GroupSummary(p, j, o);
      EXPECT_LE(s.min, s.average + 1e-12);
      EXPECT_LE(s.average, s.max + 1e-12);
      EXPECT_NEAR(s.total, s.average * p.group_size(j), 1e-9);
    }
  }
}

}  // namespace
}  // namespace fairloc

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

// Group-fair cost objectives evaluated at a facility point or over a lottery.
//
//   mtgc  max_j total_j(y)
//   magc  max_j avg_j(y)
//   iif1  max_j avg_j(y) + max_j (maxc_j(y) - minc_j(y))
//   iif2  max_j (avg_j(y) + maxc_j(y) - minc_j(y))
//   alt-a-<h>  max_j h_j(y) - min_j h_j(y)
//   alt-b-<h>  max_j h_j(y) / min_j h_j(y), with 0/0 = 1 and x/0 = +inf
//
// where h is the group total, average or maximum cost.

#ifndef FAIRLOC_OBJECTIVES_H_
#define FAIRLOC_OBJECTIVES_H_

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "fairloc/model.h"

namespace fairloc {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class ObjectiveKind {
  kMaxTotalGroupCost,
  kMaxAverageGroupCost,
  kIntergroupIntragroupSeparate,  // IIF1
  kIntergroupIntragroupCombined,  // IIF2
  kGroupCostDifference,           // alt form (a)
  kGroupCostRatio,                // alt form (b)
};

// The per-group cost the alternative forms compare.
enum class GroupCostMeasure { kTotal, kAverage, kMax };

struct ObjectiveSpec {
  ObjectiveKind kind = ObjectiveKind::kMaxTotalGroupCost;
  // Only read by the two alternative forms.
  GroupCostMeasure measure = GroupCostMeasure::kTotal;

  static ObjectiveSpec Mtgc() { return {ObjectiveKind::kMaxTotalGroupCost}; }
  static ObjectiveSpec Magc() { return {ObjectiveKind::kMaxAverageGroupCost}; }
  static ObjectiveSpec Iif1() {
    return {ObjectiveKind::kIntergroupIntragroupSeparate};
  }
  static ObjectiveSpec Iif2() {
    return {ObjectiveKind::kIntergroupIntragroupCombined};
  }
  static ObjectiveSpec Difference(GroupCostMeasure h) {
    return {ObjectiveKind::kGroupCostDifference, h};
  }
  static ObjectiveSpec Ratio(GroupCostMeasure h) {
    return {ObjectiveKind::kGroupCostRatio, h};
  }

  // mtgc, magc, iif1, iif2, alt-a-total ... alt-b-max.
  std::string Name() const;
  static ObjectiveSpec Parse(std::string_view text);

  bool is_alternative() const {
    return kind == ObjectiveKind::kGroupCostDifference ||
           kind == ObjectiveKind::kGroupCostRatio;
  }

  friend bool operator==(const ObjectiveSpec& a, const ObjectiveSpec& b) {
    return a.kind == b.kind && (!a.is_alternative() || a.measure == b.measure);
  }
};

// mtgc, magc, iif1, iif2.
std::vector<ObjectiveSpec> MainObjectives();
// The six difference/ratio objectives.
std::vector<ObjectiveSpec> AlternativeObjectives();

// Per-group costs with the facility at the single point `y`, group 1 first.
std::vector<GroupCostSummary> GroupCostsAt(const GroupedProfile& profile,
                                           double y);

// Objective value with the facility at `y`. Non-negative; +inf only for the
// ratio form when the smallest group cost is zero and the largest is not.
double EvalPoint(const GroupedProfile& profile, const ObjectiveSpec& spec,
                 double y);

// Expectation of the objective over the outcome's lottery.
double EvalOutcome(const GroupedProfile& profile, const ObjectiveSpec& spec,
                   const FacilityOutcome& outcome);

}  // namespace fairloc

#endif  // FAIRLOC_OBJECTIVES_H_

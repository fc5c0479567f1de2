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

#include "fairloc/objectives.h"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "fairloc/errors.h"

namespace fairloc {
namespace {

GroupCostSummary CostsAt(std::span<const double> members, double y) {
  GroupCostSummary c;
  c.min = kInfinity;
  for (double x : members) {
    const double d = std::abs(y - x);
    c.total += d;
    c.max = std::max(c.max, d);
    c.min = std::min(c.min, d);
  }
  c.average = c.total / static_cast<double>(members.size());
  return c;
}

double Measure(const GroupCostSummary& c, GroupCostMeasure h) {
  switch (h) {
    case GroupCostMeasure::kTotal:
      return c.total;
    case GroupCostMeasure::kAverage:
      return c.average;
    case GroupCostMeasure::kMax:
      return c.max;
  }
  return c.total;
}

const char* MeasureName(GroupCostMeasure h) {
  switch (h) {
    case GroupCostMeasure::kTotal:
      return "total";
    case GroupCostMeasure::kAverage:
      return "average";
    case GroupCostMeasure::kMax:
      return "max";
  }
  return "?";
}

}  // namespace

std::string ObjectiveSpec::Name() const {
  switch (kind) {
    case ObjectiveKind::kMaxTotalGroupCost:
      return "mtgc";
    case ObjectiveKind::kMaxAverageGroupCost:
      return "magc";
    case ObjectiveKind::kIntergroupIntragroupSeparate:
      return "iif1";
    case ObjectiveKind::kIntergroupIntragroupCombined:
      return "iif2";
    case ObjectiveKind::kGroupCostDifference:
      return std::string("alt-a-") + MeasureName(measure);
    case ObjectiveKind::kGroupCostRatio:
      return std::string("alt-b-") + MeasureName(measure);
  }
  return "?";
}

ObjectiveSpec ObjectiveSpec::Parse(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  for (const ObjectiveSpec& s : MainObjectives()) {
    if (s.Name() == lower) return s;
  }
  for (const ObjectiveSpec& s : AlternativeObjectives()) {
    if (s.Name() == lower) return s;
  }
  throw Error("unknown objective '" + std::string(text) + "'");
}

std::vector<ObjectiveSpec> MainObjectives() {
  return {ObjectiveSpec::Mtgc(), ObjectiveSpec::Magc(), ObjectiveSpec::Iif1(),
          ObjectiveSpec::Iif2()};
}

std::vector<ObjectiveSpec> AlternativeObjectives() {
  std::vector<ObjectiveSpec> out;
  for (GroupCostMeasure h : {GroupCostMeasure::kTotal,
                             GroupCostMeasure::kAverage,
                             GroupCostMeasure::kMax}) {
    out.push_back(ObjectiveSpec::Difference(h));
  }
  for (GroupCostMeasure h : {GroupCostMeasure::kTotal,
                             GroupCostMeasure::kAverage,
                             GroupCostMeasure::kMax}) {
    out.push_back(ObjectiveSpec::Ratio(h));
  }
  return out;
}

std::vector<GroupCostSummary> GroupCostsAt(const GroupedProfile& profile,
                                           double y) {
  std::vector<GroupCostSummary> out;
  out.reserve(profile.group_count());
  for (int j = 1; j <= profile.group_count(); ++j) {
    out.push_back(CostsAt(profile.group_locations(j), y));
    out.back().group = j;
  }
  return out;
}

double EvalPoint(const GroupedProfile& profile, const ObjectiveSpec& spec,
                 double y) {
  double max_total = 0.0;
  double max_average = 0.0;
  double max_spread = 0.0;
  double max_combined = 0.0;
  double max_h = 0.0;
  double min_h = kInfinity;
  for (int j = 1; j <= profile.group_count(); ++j) {
    const GroupCostSummary c = CostsAt(profile.group_locations(j), y);
    const double spread = c.max - c.min;
    max_total = std::max(max_total, c.total);
    max_average = std::max(max_average, c.average);
    max_spread = std::max(max_spread, spread);
    max_combined = std::max(max_combined, c.average + spread);
    const double h = Measure(c, spec.measure);
    max_h = std::max(max_h, h);
    min_h = std::min(min_h, h);
  }
  switch (spec.kind) {
    case ObjectiveKind::kMaxTotalGroupCost:
      return max_total;
    case ObjectiveKind::kMaxAverageGroupCost:
      return max_average;
    case ObjectiveKind::kIntergroupIntragroupSeparate:
      return max_average + max_spread;
    case ObjectiveKind::kIntergroupIntragroupCombined:
      return max_combined;
    case ObjectiveKind::kGroupCostDifference:
      return max_h - min_h;
    case ObjectiveKind::kGroupCostRatio:
      if (min_h == 0.0) return max_h == 0.0 ? 1.0 : kInfinity;
      return max_h / min_h;
  }
  return 0.0;
}

double EvalOutcome(const GroupedProfile& profile, const ObjectiveSpec& spec,
                   const FacilityOutcome& outcome) {
  double value = 0.0;
  for (const SupportPoint& s : outcome.support()) {
    value += s.probability * EvalPoint(profile, spec, s.point);
  }
  return value;
}

}  // namespace fairloc

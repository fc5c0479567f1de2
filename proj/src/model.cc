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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fairloc/errors.h"

namespace fairloc {

std::span<const double> GroupedProfile::group_locations(int group) const {
  if (group < 1 || group > group_count_) {
    throw IndexOutOfRangeError("group " + std::to_string(group) +
                               " is outside 1.." +
                               std::to_string(group_count_));
  }
  return group_locations_[group - 1];
}

GroupedProfile GroupedProfile::WithLocation(std::size_t index,
                                            double location) const {
  const std::size_t indices[] = {index};
  return WithLocations(indices, location);
}

GroupedProfile GroupedProfile::WithLocations(
    std::span<const std::size_t> indices, double location) const {
  std::vector<Agent> moved = agents_;
  for (std::size_t index : indices) {
    if (index >= moved.size()) {
      throw IndexOutOfRangeError("agent " + std::to_string(index) +
                                 " is outside the profile");
    }
    moved[index].location = location;
  }
  return BuildProfile(moved, group_count_);
}

GroupedProfile GroupedProfile::WithGroup(std::size_t index, int group) const {
  std::vector<Agent> moved = agents_;
  moved.at(index).group = group;
  return BuildProfile(moved, group_count_);
}

GroupedProfile GroupedProfile::Transformed(double scale, double shift) const {
  if (!(scale > 0.0)) {
    throw InvalidLocationError("scale must be positive");
  }
  std::vector<Agent> moved = agents_;
  for (Agent& a : moved) a.location = scale * a.location + shift;
  return BuildProfile(moved, group_count_);
}

std::vector<std::vector<double>> GroupedProfile::GroupLists() const {
  return group_locations_;
}

GroupedProfile BuildProfile(std::span<const Agent> raw, int group_count) {
  if (group_count < 1) {
    throw InvalidGroupError("group count must be at least 1");
  }
  if (raw.empty()) {
    throw InvalidLocationError("a profile needs at least one agent");
  }
  std::vector<Agent> agents(raw.begin(), raw.end());
  for (const Agent& a : agents) {
    if (!std::isfinite(a.location)) {
      throw InvalidLocationError("agent location is not finite");
    }
    if (a.group < 1 || a.group > group_count) {
      throw InvalidGroupError("group label " + std::to_string(a.group) +
                              " is outside 1.." + std::to_string(group_count));
    }
  }
  std::stable_sort(agents.begin(), agents.end(),
                   [](const Agent& a, const Agent& b) {
                     if (a.location != b.location) {
                       return a.location < b.location;
                     }
                     return a.group < b.group;
                   });

  std::vector<std::vector<double>> groups(group_count);
  for (const Agent& a : agents) groups[a.group - 1].push_back(a.location);
  for (int j = 0; j < group_count; ++j) {
    if (groups[j].empty()) throw EmptyGroupError(j + 1);
  }
  return GroupedProfile(std::move(agents), group_count, std::move(groups));
}

GroupedProfile ProfileFromGroups(
    const std::vector<std::vector<double>>& groups) {
  std::vector<Agent> raw;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    for (double x : groups[j]) {
      raw.push_back({x, static_cast<int>(j) + 1});
    }
  }
  return BuildProfile(raw, static_cast<int>(groups.size()));
}

GroupedProfile NormalizeToUnitInterval(const GroupedProfile& profile) {
  const double span = profile.span();
  if (span <= 0.0) return profile.Transformed(1.0, -profile.leftmost());
  return profile.Transformed(1.0 / span, -profile.leftmost() / span);
}

FacilityOutcome FacilityOutcome::Deterministic(double point) {
  if (!std::isfinite(point)) {
    throw InvalidOutcomeError("facility location is not finite");
  }
  return FacilityOutcome({{point, 1.0}});
}

FacilityOutcome FacilityOutcome::Lottery(std::vector<SupportPoint> support) {
  if (support.empty()) throw InvalidOutcomeError("empty lottery");
  double mass = 0.0;
  for (const SupportPoint& s : support) {
    if (!std::isfinite(s.point)) {
      throw InvalidOutcomeError("support point is not finite");
    }
    if (!(s.probability > 0.0 && s.probability <= 1.0)) {
      throw InvalidOutcomeError("probability outside (0, 1]");
    }
    mass += s.probability;
  }
  if (std::abs(mass - 1.0) > kProbabilityTolerance) {
    throw InvalidOutcomeError("probabilities do not sum to 1");
  }
  std::stable_sort(support.begin(), support.end(),
                   [](const SupportPoint& a, const SupportPoint& b) {
                     return a.point < b.point;
                   });
  std::vector<SupportPoint> merged;
  for (const SupportPoint& s : support) {
    if (!merged.empty() && merged.back().point == s.point) {
      merged.back().probability += s.probability;
    } else {
      merged.push_back(s);
    }
  }
  if (merged.size() == 1) merged.front().probability = 1.0;
  return FacilityOutcome(std::move(merged));
}

FacilityOutcome FacilityOutcome::Transformed(double scale,
                                             double shift) const {
  std::vector<SupportPoint> moved = support_;
  for (SupportPoint& s : moved) s.point = scale * s.point + shift;
  return Lottery(std::move(moved));
}

double AgentCost(const FacilityOutcome& outcome, double location) {
  double cost = 0.0;
  for (const SupportPoint& s : outcome.support()) {
    cost += s.probability * std::abs(s.point - location);
  }
  return cost;
}

GroupCostSummary GroupSummary(const GroupedProfile& profile, int group,
                              const FacilityOutcome& outcome) {
  const auto members = profile.group_locations(group);
  GroupCostSummary summary;
  summary.group = group;
  summary.max = 0.0;
  summary.min = std::numeric_limits<double>::infinity();
  for (double x : members) {
    const double c = AgentCost(outcome, x);
    summary.total += c;
    summary.max = std::max(summary.max, c);
    summary.min = std::min(summary.min, c);
  }
  summary.average = summary.total / static_cast<double>(members.size());
  return summary;
}

}  // namespace fairloc

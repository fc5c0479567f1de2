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

// Agents on the real line, partitioned into groups, and the facility
// outcomes that mechanisms map them to.

#ifndef FAIRLOC_MODEL_H_
#define FAIRLOC_MODEL_H_

#include <cstddef>
#include <span>
#include <vector>

namespace fairloc {

// Absolute tolerance for comparing locations and objective values.
inline constexpr double kTolerance = 1e-9;
// Tolerance on the total mass of a lottery.
inline constexpr double kProbabilityTolerance = 1e-12;

// One agent's reported location and its group label. Groups are numbered
// from 1 to the profile's group count.
struct Agent {
  double location = 0.0;
  int group = 1;

  friend bool operator==(const Agent&, const Agent&) = default;
};

// A validated, immutable profile. Agents are kept sorted by location, with
// colocated agents ordered by group index and then by input order, so that
// every mechanism sees one canonical order.
class GroupedProfile {
 public:
  std::span<const Agent> agents() const { return agents_; }
  const Agent& agent(std::size_t index) const { return agents_.at(index); }
  std::size_t size() const { return agents_.size(); }
  int group_count() const { return group_count_; }

  // Sorted locations of the members of `group` (1-based).
  std::span<const double> group_locations(int group) const;
  std::size_t group_size(int group) const {
    return group_locations(group).size();
  }

  double leftmost() const { return agents_.front().location; }
  double rightmost() const { return agents_.back().location; }
  double span() const { return rightmost() - leftmost(); }

  // Copy of this profile with the given agents moved to `location`; group
  // labels are unchanged. Indices refer to this profile's sorted order.
  GroupedProfile WithLocation(std::size_t index, double location) const;
  GroupedProfile WithLocations(std::span<const std::size_t> indices,
                               double location) const;

  // Copy with agent `index` relabeled to `group`. Throws EmptyGroupError if
  // that leaves its old group empty.
  GroupedProfile WithGroup(std::size_t index, int group) const;

  // Applies x -> scale * x + shift to every agent; scale must be positive.
  GroupedProfile Transformed(double scale, double shift) const;

  // Member locations per group, group 1 first.
  std::vector<std::vector<double>> GroupLists() const;

  friend bool operator==(const GroupedProfile& a, const GroupedProfile& b) {
    return a.group_count_ == b.group_count_ && a.agents_ == b.agents_;
  }

 private:
  friend GroupedProfile BuildProfile(std::span<const Agent> raw,
                                     int group_count);

  GroupedProfile(std::vector<Agent> agents, int group_count,
                 std::vector<std::vector<double>> group_locations)
      : agents_(std::move(agents)),
        group_count_(group_count),
        group_locations_(std::move(group_locations)) {}

  std::vector<Agent> agents_;
  int group_count_;
  std::vector<std::vector<double>> group_locations_;
};

// Validates and sorts a raw agent list. Throws InvalidGroupError for a
// group count below 1 or an out-of-range label, InvalidLocationError for
// non-finite locations or an empty list, and EmptyGroupError when some group
// has no members.
GroupedProfile BuildProfile(std::span<const Agent> raw, int group_count);

// Builds a profile from per-group location lists; `groups[j]` holds the
// members of group j + 1.
GroupedProfile ProfileFromGroups(
    const std::vector<std::vector<double>>& groups);

// Affinely rescales a profile onto [0, 1]. A profile with zero span is
// translated to 0.
GroupedProfile NormalizeToUnitInterval(const GroupedProfile& profile);

struct SupportPoint {
  double point = 0.0;
  double probability = 1.0;

  friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

// A facility location or a finite lottery over locations. The support is
// sorted by point and holds pairwise distinct points with positive mass.
class FacilityOutcome {
 public:
  static FacilityOutcome Deterministic(double point);
  // Merges repeated points and validates the distribution; throws
  // InvalidOutcomeError on bad input.
  static FacilityOutcome Lottery(std::vector<SupportPoint> support);

  const std::vector<SupportPoint>& support() const& { return support_; }
  // Moves out, so that iterating the support of a temporary stays valid.
  std::vector<SupportPoint> support() && { return std::move(support_); }
  bool is_deterministic() const { return support_.size() == 1; }
  // The single support point; only meaningful when deterministic.
  double point() const { return support_.front().point; }

  FacilityOutcome Transformed(double scale, double shift) const;

  friend bool operator==(const FacilityOutcome&,
                         const FacilityOutcome&) = default;

 private:
  explicit FacilityOutcome(std::vector<SupportPoint> support)
      : support_(std::move(support)) {}

  std::vector<SupportPoint> support_;
};

// Expected distance from `location` to the facility.
double AgentCost(const FacilityOutcome& outcome, double location);

struct GroupCostSummary {
  int group = 1;
  double total = 0.0;
  double average = 0.0;
  double max = 0.0;
  double min = 0.0;
};

// Total, average, largest and smallest expected cost over one group.
GroupCostSummary GroupSummary(const GroupedProfile& profile, int group,
                              const FacilityOutcome& outcome);

}  // namespace fairloc

#endif  // FAIRLOC_MODEL_H_

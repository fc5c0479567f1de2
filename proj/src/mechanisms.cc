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

#include "fairloc/mechanisms.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "fairloc/errors.h"

namespace fairloc {
namespace {

// Lottery with mass 1/4 on each end and 1/2 on the midpoint.
FacilityOutcome QuarterHalfQuarter(double left, double right) {
  return FacilityOutcome::Lottery(
      {{left, 0.25}, {(left + right) / 2.0, 0.5}, {right, 0.25}});
}

std::vector<double> GroupMedians(const GroupedProfile& profile) {
  std::vector<double> medians;
  medians.reserve(profile.group_count());
  for (int j = 1; j <= profile.group_count(); ++j) {
    medians.push_back(LeftMedian(profile.group_locations(j)));
  }
  return medians;
}

std::string Upper(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::toupper(c));
  return out;
}

}  // namespace

std::size_t MedianIndex(std::size_t count) { return (count + 1) / 2; }

double LeftMedian(std::span<const double> sorted) {
  return sorted[MedianIndex(sorted.size()) - 1];
}

FacilityOutcome MedianMechanism(const GroupedProfile& profile) {
  return FacilityOutcome::Deterministic(
      profile.agent(MedianIndex(profile.size()) - 1).location);
}

FacilityOutcome LeftmostMechanism(const GroupedProfile& profile) {
  return FacilityOutcome::Deterministic(profile.leftmost());
}

FacilityOutcome KthLocationMechanism(const GroupedProfile& profile, int k) {
  if (k < 1 || static_cast<std::size_t>(k) > profile.size()) {
    throw IndexOutOfRangeError("k = " + std::to_string(k) +
                               " is outside 1.." +
                               std::to_string(profile.size()));
  }
  return FacilityOutcome::Deterministic(profile.agent(k - 1).location);
}

FacilityOutcome MajorityGroupMechanism(const GroupedProfile& profile) {
  int largest = 1;
  for (int j = 2; j <= profile.group_count(); ++j) {
    if (profile.group_size(j) > profile.group_size(largest)) largest = j;
  }
  return FacilityOutcome::Deterministic(
      LeftMedian(profile.group_locations(largest)));
}

FacilityOutcome RandomizedMechanism(const GroupedProfile& profile) {
  return QuarterHalfQuarter(profile.leftmost(), profile.rightmost());
}

FacilityOutcome NarrowRandomizedMechanism(const GroupedProfile& profile) {
  const std::vector<double> medians = GroupMedians(profile);
  const auto [lo, hi] = std::minmax_element(medians.begin(), medians.end());
  return QuarterHalfQuarter(*lo, *hi);
}

FacilityOutcome MedianOfGroupMediansMechanism(const GroupedProfile& profile) {
  std::vector<double> medians = GroupMedians(profile);
  std::sort(medians.begin(), medians.end());
  return FacilityOutcome::Deterministic(LeftMedian(medians));
}

FacilityOutcome MedianOfGroupMechanism(const GroupedProfile& profile,
                                       int group) {
  if (group < 1 || group > profile.group_count()) {
    throw IndexOutOfRangeError("group " + std::to_string(group) +
                               " is outside 1.." +
                               std::to_string(profile.group_count()));
  }
  return FacilityOutcome::Deterministic(
      LeftMedian(profile.group_locations(group)));
}

FacilityOutcome Apply(const MechanismId& id, const GroupedProfile& profile) {
  switch (id.kind) {
    case MechanismKind::kMedian:
      return MedianMechanism(profile);
    case MechanismKind::kLeftmost:
      return LeftmostMechanism(profile);
    case MechanismKind::kKthLocation:
      return KthLocationMechanism(profile, id.parameter);
    case MechanismKind::kMajorityGroupMedian:
      return MajorityGroupMechanism(profile);
    case MechanismKind::kRandomized:
      return RandomizedMechanism(profile);
    case MechanismKind::kNarrowRandomized:
      return NarrowRandomizedMechanism(profile);
    case MechanismKind::kMedianOfGroupMedians:
      return MedianOfGroupMediansMechanism(profile);
    case MechanismKind::kMedianOfGroup:
      return MedianOfGroupMechanism(profile, id.parameter);
  }
  throw Error("unknown mechanism kind");
}

Mechanism MakeMechanism(const MechanismId& id) {
  return [id](const GroupedProfile& profile) { return Apply(id, profile); };
}

std::string MechanismId::Name() const {
  switch (kind) {
    case MechanismKind::kMedian:
      return "MDM";
    case MechanismKind::kLeftmost:
      return "LDM";
    case MechanismKind::kKthLocation:
      return "KLDM:" + std::to_string(parameter);
    case MechanismKind::kMajorityGroupMedian:
      return "MGDM";
    case MechanismKind::kRandomized:
      return "RM";
    case MechanismKind::kNarrowRandomized:
      return "NRM";
    case MechanismKind::kMedianOfGroupMedians:
      return "MOGM";
    case MechanismKind::kMedianOfGroup:
      return "MOG:" + std::to_string(parameter);
  }
  return "?";
}

MechanismId MechanismId::Parse(std::string_view text) {
  const std::string upper = Upper(text);
  const std::size_t colon = upper.find(':');
  const std::string head = upper.substr(0, colon);
  int parameter = 0;
  if (colon != std::string::npos) {
    const std::string tail = upper.substr(colon + 1);
    const auto [end, ec] =
        std::from_chars(tail.data(), tail.data() + tail.size(), parameter);
    if (ec != std::errc() || end != tail.data() + tail.size() ||
        tail.empty() || parameter < 1) {
      throw Error("bad mechanism parameter in '" + std::string(text) + "'");
    }
  }
  const bool wants_parameter = head == "KLDM" || head == "MOG";
  if (wants_parameter != (colon != std::string::npos)) {
    throw Error("mechanism '" + std::string(text) +
                "' has a missing or unexpected parameter");
  }
  if (head == "MDM") return {MechanismKind::kMedian, 0};
  if (head == "LDM") return {MechanismKind::kLeftmost, 0};
  if (head == "KLDM") return {MechanismKind::kKthLocation, parameter};
  if (head == "MGDM") return {MechanismKind::kMajorityGroupMedian, 0};
  if (head == "RM") return {MechanismKind::kRandomized, 0};
  if (head == "NRM") return {MechanismKind::kNarrowRandomized, 0};
  if (head == "MOGM") return {MechanismKind::kMedianOfGroupMedians, 0};
  if (head == "MOG") return {MechanismKind::kMedianOfGroup, parameter};
  throw Error("unknown mechanism '" + std::string(text) + "'");
}

}  // namespace fairloc

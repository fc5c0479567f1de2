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

// Facility location mechanisms. Every even-sized median in this file is the
// left median, i.e. the ceil(k/2)-th smallest of k values.

#ifndef FAIRLOC_MECHANISMS_H_
#define FAIRLOC_MECHANISMS_H_

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "fairloc/model.h"

namespace fairloc {

enum class MechanismKind {
  kMedian,                // MDM
  kLeftmost,              // LDM
  kKthLocation,           // k-LDM, parameter k
  kMajorityGroupMedian,   // MGDM
  kRandomized,            // RM
  kNarrowRandomized,      // NRM
  kMedianOfGroupMedians,  // MOGM
  kMedianOfGroup,         // MOG, parameter j
};

struct MechanismId {
  MechanismKind kind = MechanismKind::kMedian;
  // k for kKthLocation, the group index for kMedianOfGroup, unused otherwise.
  int parameter = 0;

  // Short names: MDM, LDM, KLDM:<k>, MGDM, RM, NRM, MOGM, MOG:<j>.
  std::string Name() const;
  // Case-insensitive inverse of Name(); throws Error on unknown input.
  static MechanismId Parse(std::string_view text);

  bool randomized() const {
    return kind == MechanismKind::kRandomized ||
           kind == MechanismKind::kNarrowRandomized;
  }

  friend bool operator==(const MechanismId&, const MechanismId&) = default;
};

using Mechanism = std::function<FacilityOutcome(const GroupedProfile&)>;

// 1-based position of the left median among `count` sorted values.
std::size_t MedianIndex(std::size_t count);

// Left median of a non-empty sorted range.
double LeftMedian(std::span<const double> sorted);

FacilityOutcome MedianMechanism(const GroupedProfile& profile);
FacilityOutcome LeftmostMechanism(const GroupedProfile& profile);
// Throws IndexOutOfRangeError unless 1 <= k <= n.
FacilityOutcome KthLocationMechanism(const GroupedProfile& profile, int k);
// Left median of the largest group; ties go to the smallest group index.
FacilityOutcome MajorityGroupMechanism(const GroupedProfile& profile);
FacilityOutcome RandomizedMechanism(const GroupedProfile& profile);
FacilityOutcome NarrowRandomizedMechanism(const GroupedProfile& profile);
FacilityOutcome MedianOfGroupMediansMechanism(const GroupedProfile& profile);
// Throws IndexOutOfRangeError unless 1 <= group <= m.
FacilityOutcome MedianOfGroupMechanism(const GroupedProfile& profile,
                                       int group);

FacilityOutcome Apply(const MechanismId& id, const GroupedProfile& profile);
Mechanism MakeMechanism(const MechanismId& id);

}  // namespace fairloc

#endif  // FAIRLOC_MECHANISMS_H_

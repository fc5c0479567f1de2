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

// Strategyproofness checks by misreport search, and replays of the
// two-profile lower-bound constructions against concrete mechanisms.

#ifndef FAIRLOC_AUDIT_H_
#define FAIRLOC_AUDIT_H_

#include <cstddef>
#include <variant>
#include <vector>

#include "fairloc/mechanisms.h"
#include "fairloc/model.h"
#include "fairloc/objectives.h"

namespace fairloc {

// A misreport that strictly lowers the deviators' expected cost. All
// deviators share `true_location` and jointly report `misreport`.
struct AuditFinding {
  // Indices into the truthful profile's sorted agent order.
  std::vector<std::size_t> deviators;
  double true_location = 0.0;
  double misreport = 0.0;
  double truthful_cost = 0.0;
  double deviating_cost = 0.0;
};

// Misreports worth trying for `agent`: every other agent's location, every
// group's left median, the reflections of those about the agent's own
// location, and `resolution` evenly spaced points on [x_1 - w, x_n + w]
// where w is the span (1 when all agents coincide). The agent's own
// location is never included.
std::vector<double> MisreportCandidates(const GroupedProfile& profile,
                                        std::size_t agent, int resolution);

// Unilateral deviations, keeping the deviator's group label. Findings are
// ordered by (agent, misreport).
std::vector<AuditFinding> SpAudit(const Mechanism& mechanism,
                                  const GroupedProfile& profile,
                                  int resolution);

// Joint deviations of each maximal set of colocated agents to a common
// point. Singletons are included, so this subsumes SpAudit's agents with a
// unique location.
std::vector<AuditFinding> GroupSpAudit(const Mechanism& mechanism,
                                       const GroupedProfile& profile,
                                       int resolution);

// Re-runs the mechanism from scratch and checks the finding still holds.
bool Reproduces(const Mechanism& mechanism, const GroupedProfile& profile,
                const AuditFinding& finding);

struct Inconclusive {};

struct RatioWitness {
  GroupedProfile profile;
  double ratio = 0.0;
};

struct SpViolation {
  // The truthful profile the finding refers to.
  GroupedProfile profile;
  AuditFinding finding;
};

using ProbeVerdict = std::variant<Inconclusive, RatioWitness, SpViolation>;

// Replays the lower-bound construction for `spec` against `mechanism`.
//
// mtgc, magc and the alternative objectives use two singleton groups at 0
// and 1, then move one of them to the observed facility (deterministic
// mechanisms) or push one of them outward to 2 or -1 (randomized ones).
// iif1 and iif2 use two groups of R + 1 agents split between the two
// locations, R = min(ceil(2 / epsilon), 50).
//
// Returns a RatioWitness when the mechanism's ratio on either profile is at
// least bound - epsilon, otherwise an SpViolation when the construction's
// misreport strictly helps, otherwise Inconclusive. Throws
// ConstructionInapplicableError when the observed facility lies outside the
// case analysis.
ProbeVerdict LowerBoundProbe(const Mechanism& mechanism,
                             const ObjectiveSpec& spec, double bound,
                             double epsilon);

}  // namespace fairloc

#endif  // FAIRLOC_AUDIT_H_

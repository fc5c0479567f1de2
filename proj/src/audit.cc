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

#include "fairloc/audit.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "fairloc/errors.h"
#include "fairloc/families.h"
#include "fairloc/oracle.h"

namespace fairloc {
namespace {

constexpr double kSameLocation = 1e-12;
constexpr int kMaxReplication = 50;

std::optional<AuditFinding> TryDeviation(const Mechanism& mechanism,
                                         const GroupedProfile& profile,
                                         std::span<const std::size_t> group,
                                         double truthful_cost,
                                         double misreport) {
  const double x = profile.agent(group.front()).location;
  const double cost =
      AgentCost(mechanism(profile.WithLocations(group, misreport)), x);
  if (cost < truthful_cost - kTolerance) {
    return AuditFinding{{group.begin(), group.end()}, x, misreport,
                        truthful_cost, cost};
  }
  return std::nullopt;
}

std::vector<AuditFinding> AuditSets(
    const Mechanism& mechanism, const GroupedProfile& profile,
    const std::vector<std::vector<std::size_t>>& sets, int resolution) {
  const FacilityOutcome truthful = mechanism(profile);
  std::vector<AuditFinding> findings;
  for (const auto& set : sets) {
    const double x = profile.agent(set.front()).location;
    const double truthful_cost = AgentCost(truthful, x);
    for (double c : MisreportCandidates(profile, set.front(), resolution)) {
      if (auto f = TryDeviation(mechanism, profile, set, truthful_cost, c)) {
        findings.push_back(std::move(*f));
      }
    }
  }
  return findings;
}

std::optional<RatioWitness> WitnessIfTight(const Mechanism& mechanism,
                                           const GroupedProfile& profile,
                                           const ObjectiveSpec& spec,
                                           double bound, double epsilon) {
  const double ratio = Ratio(profile, mechanism, spec).ratio;
  if (ratio >= bound - epsilon - kTolerance) {
    return RatioWitness{profile, ratio};
  }
  return std::nullopt;
}

// Second half of every construction: the ratio on r' is checked first, then
// the deviators of r' (all at `true_location`) try `misreport`.
ProbeVerdict FinishProbe(const Mechanism& mechanism,
                         const GroupedProfile& deviated_from,
                         const ObjectiveSpec& spec, double bound,
                         double epsilon, double true_location,
                         double misreport) {
  if (auto w = WitnessIfTight(mechanism, deviated_from, spec, bound, epsilon)) {
    return *w;
  }
  std::vector<std::size_t> deviators;
  for (std::size_t i = 0; i < deviated_from.size(); ++i) {
    if (deviated_from.agent(i).location == true_location) {
      deviators.push_back(i);
    }
  }
  if (deviators.empty() || misreport == true_location) return Inconclusive{};
  const double truthful_cost =
      AgentCost(mechanism(deviated_from), true_location);
  if (auto f = TryDeviation(mechanism, deviated_from, deviators,
                            truthful_cost, misreport)) {
    return SpViolation{deviated_from, std::move(*f)};
  }
  return Inconclusive{};
}

ProbeVerdict TwoSingletonProbe(const Mechanism& mechanism,
                               const ObjectiveSpec& spec, double bound,
                               double epsilon) {
  const GroupedProfile r = TwoSingletons(0.0, 1.0);
  if (auto w = WitnessIfTight(mechanism, r, spec, bound, epsilon)) return *w;

  const FacilityOutcome out = mechanism(r);
  if (out.is_deterministic()) {
    const double y = out.point();
    if (y >= 0.5 && y <= 1.0) {
      return FinishProbe(mechanism, TwoSingletons(0.0, y), spec, bound,
                         epsilon, y, 1.0);
    }
    if (y >= 0.0 && y < 0.5) {
      return FinishProbe(mechanism, TwoSingletons(y, 1.0), spec, bound,
                         epsilon, y, 0.0);
    }
    throw ConstructionInapplicableError(
        "facility outside [0, 1] on the two-singleton profile");
  }

  // Randomized: the endpoint agent with the larger expected cost reports a
  // location twice as far out; on that profile, any lottery that keeps it
  // truthful must cost the optimum an extra half.
  if (AgentCost(out, 1.0) >= AgentCost(out, 0.0)) {
    const GroupedProfile r2 = TwoSingletons(0.0, 2.0);
    if (auto w = WitnessIfTight(mechanism, r2, spec, bound, epsilon)) {
      return *w;
    }
    const std::size_t deviator[] = {1};
    if (auto f = TryDeviation(mechanism, r, deviator, AgentCost(out, 1.0),
                              2.0)) {
      return SpViolation{r, std::move(*f)};
    }
    return Inconclusive{};
  }
  const GroupedProfile r2 = TwoSingletons(-1.0, 1.0);
  if (auto w = WitnessIfTight(mechanism, r2, spec, bound, epsilon)) return *w;
  const std::size_t deviator[] = {0};
  if (auto f =
          TryDeviation(mechanism, r, deviator, AgentCost(out, 0.0), -1.0)) {
    return SpViolation{r, std::move(*f)};
  }
  return Inconclusive{};
}

ProbeVerdict ReplicatedProbe(const Mechanism& mechanism,
                             const ObjectiveSpec& spec, double bound,
                             double epsilon) {
  int replication = kMaxReplication;
  if (epsilon > 0.0) {
    replication = static_cast<int>(
        std::min<double>(std::ceil(2.0 / epsilon), kMaxReplication));
  }
  const GroupedProfile r = SplitGroupsProfile(replication, 0.0, 1.0);
  if (auto w = WitnessIfTight(mechanism, r, spec, bound, epsilon)) return *w;

  const FacilityOutcome out = mechanism(r);
  if (!out.is_deterministic()) {
    throw ConstructionInapplicableError(
        "the replicated construction needs a deterministic mechanism");
  }
  const double y = out.point();
  if (y >= 0.5 && y <= 1.0) {
    return FinishProbe(mechanism, SplitGroupsProfile(replication, 0.0, y),
                       spec, bound, epsilon, y, 1.0);
  }
  if (y >= 0.0 && y < 0.5) {
    return FinishProbe(mechanism, SplitGroupsProfile(replication, y, 1.0),
                       spec, bound, epsilon, y, 0.0);
  }
  throw ConstructionInapplicableError(
      "facility outside [0, 1] on the replicated profile");
}

}  // namespace

std::vector<double> MisreportCandidates(const GroupedProfile& profile,
                                        std::size_t agent, int resolution) {
  const double x = profile.agent(agent).location;
  std::vector<double> anchors;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i != agent) anchors.push_back(profile.agent(i).location);
  }
  for (int j = 1; j <= profile.group_count(); ++j) {
    anchors.push_back(LeftMedian(profile.group_locations(j)));
  }

  std::vector<double> out = anchors;
  for (double a : anchors) out.push_back(2.0 * x - a);
  const double width = profile.span() > 0.0 ? profile.span() : 1.0;
  const double lo = profile.leftmost() - width;
  const double hi = profile.rightmost() + width;
  for (int i = 0; i < resolution; ++i) {
    out.push_back(resolution == 1
                      ? lo
                      : lo + (hi - lo) * static_cast<double>(i) /
                                 static_cast<double>(resolution - 1));
  }

  std::sort(out.begin(), out.end());
  std::vector<double> unique;
  for (double c : out) {
    if (std::abs(c - x) <= kSameLocation) continue;
    if (unique.empty() || c - unique.back() > kSameLocation) {
      unique.push_back(c);
    }
  }
  return unique;
}

std::vector<AuditFinding> SpAudit(const Mechanism& mechanism,
                                  const GroupedProfile& profile,
                                  int resolution) {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 0; i < profile.size(); ++i) sets.push_back({i});
  return AuditSets(mechanism, profile, sets, resolution);
}

std::vector<AuditFinding> GroupSpAudit(const Mechanism& mechanism,
                                       const GroupedProfile& profile,
                                       int resolution) {
  std::vector<std::vector<std::size_t>> sets;
  for (std::size_t i = 0; i < profile.size(); ++i) {
    if (i > 0 &&
        profile.agent(i).location == profile.agent(i - 1).location) {
      sets.back().push_back(i);
    } else {
      sets.push_back({i});
    }
  }
  return AuditSets(mechanism, profile, sets, resolution);
}

bool Reproduces(const Mechanism& mechanism, const GroupedProfile& profile,
                const AuditFinding& finding) {
  for (std::size_t i : finding.deviators) {
    if (profile.agent(i).location != finding.true_location) return false;
  }
  const double truthful =
      AgentCost(mechanism(profile), finding.true_location);
  const double deviating = AgentCost(
      mechanism(profile.WithLocations(finding.deviators, finding.misreport)),
      finding.true_location);
  return deviating < truthful - kTolerance;
}

ProbeVerdict LowerBoundProbe(const Mechanism& mechanism,
                             const ObjectiveSpec& spec, double bound,
                             double epsilon) {
  switch (spec.kind) {
    case ObjectiveKind::kIntergroupIntragroupSeparate:
    case ObjectiveKind::kIntergroupIntragroupCombined:
      return ReplicatedProbe(mechanism, spec, bound, epsilon);
    default:
      return TwoSingletonProbe(mechanism, spec, bound, epsilon);
  }
}

}  // namespace fairloc

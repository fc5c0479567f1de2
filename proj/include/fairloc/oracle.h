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

// Exact minimization of the group-fair objectives over the facility
// location, and approximation ratios of mechanisms against that optimum.
//
// Every per-group quantity (total, average, largest and smallest distance)
// is piecewise linear in y, with kinks only at agent locations and at
// midpoints of same-group agents. Between two consecutive breakpoints each
// objective is therefore built from max/min/sum/ratio of linear functions,
// and its minimum over the interval is attained at an endpoint or at a point
// where two of those linear pieces cross. Enumerating these candidates gives
// the exact optimum.

#ifndef FAIRLOC_ORACLE_H_
#define FAIRLOC_ORACLE_H_

#include <vector>

#include "fairloc/mechanisms.h"
#include "fairloc/model.h"
#include "fairloc/objectives.h"

namespace fairloc {

struct OptimalResult {
  // Leftmost global minimizer.
  double location = 0.0;
  double value = 0.0;
  // Every candidate point attaining `value` within kTolerance, ascending.
  std::vector<double> minimizers;
};

struct RatioReport {
  FacilityOutcome outcome = FacilityOutcome::Deterministic(0.0);
  double mechanism_value = 0.0;
  OptimalResult optimal;
  // mechanism_value / optimal.value. A zero optimum gives 1 when the
  // mechanism also scores zero and +inf otherwise.
  double ratio = 1.0;
};

// Sorted, deduplicated (1e-12) superset of the kinks of every per-group
// cost function: agent locations, midpoints of consecutive members of a
// group, the midpoint of each group's extreme members, and midpoints of
// consecutive distinct agent locations.
std::vector<double> Breakpoints(const GroupedProfile& profile);

// Exact global minimum over the real line. The four main objectives are
// searched on [x_1, x_n], outside of which they never decrease; the
// alternative objectives additionally search both outer rays. A ratio-form
// objective may only approach its infimum as y goes to infinity; the
// result then carries that infimum with location -inf and minimizers
// {-inf, +inf}. Throws UnboundedError when every candidate of a ratio-form
// objective is +inf.
OptimalResult Optimize(const GroupedProfile& profile,
                       const ObjectiveSpec& spec);

// Brute-force minimum over `resolution` evenly spaced points of [x_1, x_n].
// Independent of Optimize; used to cross-check it.
OptimalResult GridOptimize(const GroupedProfile& profile,
                           const ObjectiveSpec& spec, int resolution);

double RatioOf(double mechanism_value, double optimal_value);

RatioReport Ratio(const GroupedProfile& profile, const Mechanism& mechanism,
                  const ObjectiveSpec& spec);
RatioReport Ratio(const GroupedProfile& profile, const MechanismId& mechanism,
                  const ObjectiveSpec& spec);

}  // namespace fairloc

#endif  // FAIRLOC_ORACLE_H_

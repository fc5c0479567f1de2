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

// Seeded search for profiles on which a mechanism's approximation ratio is
// large. Everything here is a deterministic function of the config.

#ifndef FAIRLOC_ADVERSARY_H_
#define FAIRLOC_ADVERSARY_H_

#include <cstdint>
#include <vector>

#include "fairloc/mechanisms.h"
#include "fairloc/model.h"
#include "fairloc/objectives.h"

namespace fairloc {

struct SearchConfig {
  std::uint64_t seed = 0;
  int n_min = 2;
  int n_max = 8;
  int m_min = 1;
  int m_max = 3;
  int iterations = 2000;
  double perturbation_scale = 0.1;
  int restarts = 20;
  // Restart r starts from initial_profiles[r] when there is one, and from
  // RandomProfile(config, r) otherwise.
  std::vector<GroupedProfile> initial_profiles;

  // Throws Error if a range is empty or a count is not positive.
  void Validate() const;
};

struct TracePoint {
  int restart = 0;
  int iteration = 0;
  double ratio = 0.0;
};

struct WorstCaseReport {
  GroupedProfile best_profile;
  double best_ratio = 1.0;
  int best_restart = 0;
  // Successive improvements of the best ratio over all restarts, in restart
  // order; ratios strictly increase.
  std::vector<TracePoint> trace;
};

// n and m uniform in their ranges (m capped at n), group sizes a uniform
// composition of n into m positive parts, locations uniform on [0, 1].
GroupedProfile RandomProfile(const SearchConfig& config,
                             std::uint64_t draw_index);

// Multi-restart hill climbing. Each step moves one agent by a normal draw
// with standard deviation perturbation_scale (clamped to [0, 1]) or moves
// one agent to another group, possibly a new one while m < m_max; a step
// that would empty a group is skipped. A step is kept unless it lowers the
// ratio. Restarts run concurrently on independent generator streams.
WorstCaseReport HillClimb(const Mechanism& mechanism, const ObjectiveSpec& spec,
                          const SearchConfig& config);

struct ConformanceResult {
  bool conforms = true;
  WorstCaseReport report;
};

// conforms is true iff the best ratio found stays within bound + 1e-9.
ConformanceResult BoundConformance(const Mechanism& mechanism,
                                   const ObjectiveSpec& spec, double bound,
                                   const SearchConfig& config);

}  // namespace fairloc

#endif  // FAIRLOC_ADVERSARY_H_

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

#include "fairloc/adversary.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <optional>
#include <random>

#include "fairloc/errors.h"
#include "fairloc/oracle.h"

namespace fairloc {
namespace {

enum class Stream : std::uint32_t { kProfile = 0, kClimb = 1 };

std::mt19937_64 MakeEngine(std::uint64_t seed, Stream stream,
                           std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

int UniformInt(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

struct RestartResult {
  GroupedProfile best;
  double ratio;
  std::vector<TracePoint> trace;
};

RestartResult Climb(const Mechanism& mechanism, const ObjectiveSpec& spec,
                    const SearchConfig& config, int restart) {
  std::mt19937_64 rng =
      MakeEngine(config.seed, Stream::kClimb, static_cast<std::uint64_t>(restart));
  std::normal_distribution<double> step(0.0, config.perturbation_scale);

  GroupedProfile current =
      static_cast<std::size_t>(restart) < config.initial_profiles.size()
          ? config.initial_profiles[restart]
          : RandomProfile(config, static_cast<std::uint64_t>(restart));
  double best = Ratio(current, mechanism, spec).ratio;
  std::vector<TracePoint> trace{{restart, 0, best}};

  for (int it = 1; it <= config.iterations && !std::isinf(best); ++it) {
    const int n = static_cast<int>(current.size());
    const int m = current.group_count();
    const std::size_t agent = static_cast<std::size_t>(UniformInt(rng, 0, n - 1));
    const bool relabel = UniformInt(rng, 0, 1) == 1;
    double drawn = 0.0;
    int target = 0;
    // Relabel targets are the other m - 1 groups plus, below m_max, a new
    // group m + 1.
    const int opened = m < config.m_max ? 1 : 0;
    if (relabel) {
      target = m - 1 + opened > 0 ? UniformInt(rng, 1, m - 1 + opened) : 0;
    } else {
      drawn = step(rng);
    }

    std::optional<GroupedProfile> candidate;
    if (relabel) {
      const int from = current.agent(agent).group;
      if (target == 0 || current.group_size(from) < 2) continue;
      // Skip over the agent's own group.
      const int to = target >= from ? target + 1 : target;
      if (to > m) {
        std::vector<Agent> agents(current.agents().begin(),
                                  current.agents().end());
        agents[agent].group = to;
        candidate = BuildProfile(agents, to);
      } else {
        candidate = current.WithGroup(agent, to);
      }
    } else {
      const double x = current.agent(agent).location;
      candidate = current.WithLocation(agent, std::clamp(x + drawn, 0.0, 1.0));
    }

    // Sideways moves are accepted so that plateaus, such as ratio 1 where
    // the mechanism is optimal, do not end the climb.
    const double ratio = Ratio(*candidate, mechanism, spec).ratio;
    if (ratio >= best) {
      if (ratio > best) trace.push_back({restart, it, ratio});
      best = ratio;
      current = std::move(*candidate);
    }
  }
  return {std::move(current), best, std::move(trace)};
}

}  // namespace

void SearchConfig::Validate() const {
  if (m_min < 1 || m_max < m_min) throw Error("bad group-count range");
  if (n_min < std::max(1, m_min) || n_max < n_min) {
    throw Error("bad agent-count range");
  }
  if (iterations < 1) throw Error("iterations must be positive");
  if (restarts < 1) throw Error("restarts must be positive");
  if (!(perturbation_scale > 0.0)) {
    throw Error("perturbation scale must be positive");
  }
}

GroupedProfile RandomProfile(const SearchConfig& config,
                             std::uint64_t draw_index) {
  config.Validate();
  std::mt19937_64 rng = MakeEngine(config.seed, Stream::kProfile, draw_index);
  const int n = UniformInt(rng, config.n_min, config.n_max);
  const int m = UniformInt(rng, config.m_min, std::min(config.m_max, n));

  // A uniformly random composition of n into m positive parts corresponds
  // to a uniformly random choice of m - 1 cut points among 1..n-1.
  std::vector<int> cuts(static_cast<std::size_t>(n - 1));
  std::iota(cuts.begin(), cuts.end(), 1);
  for (int i = 0; i < m - 1; ++i) {
    const int j = UniformInt(rng, i, n - 2);
    std::swap(cuts[i], cuts[j]);
  }
  cuts.resize(static_cast<std::size_t>(m - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::uniform_real_distribution<double> location(0.0, 1.0);
  std::vector<Agent> agents;
  int group = 1;
  for (int i = 0; i < n; ++i) {
    if (i >= cuts[group - 1]) ++group;
    agents.push_back({location(rng), group});
  }
  return BuildProfile(agents, m);
}

WorstCaseReport HillClimb(const Mechanism& mechanism, const ObjectiveSpec& spec,
                          const SearchConfig& config) {
  config.Validate();
  std::vector<std::future<RestartResult>> pending;
  pending.reserve(config.restarts);
  for (int r = 0; r < config.restarts; ++r) {
    pending.push_back(std::async(std::launch::async, Climb,
                                 std::cref(mechanism), std::cref(spec),
                                 std::cref(config), r));
  }
  std::vector<RestartResult> results;
  results.reserve(pending.size());
  for (auto& f : pending) results.push_back(f.get());

  WorstCaseReport report{results.front().best, results.front().ratio, 0, {}};
  double running = -kInfinity;
  for (std::size_t r = 0; r < results.size(); ++r) {
    if (results[r].ratio > report.best_ratio) {
      report.best_profile = results[r].best;
      report.best_ratio = results[r].ratio;
      report.best_restart = static_cast<int>(r);
    }
    for (const TracePoint& p : results[r].trace) {
      if (p.ratio > running) {
        running = p.ratio;
        report.trace.push_back(p);
      }
    }
  }
  return report;
}

ConformanceResult BoundConformance(const Mechanism& mechanism,
                                   const ObjectiveSpec& spec, double bound,
                                   const SearchConfig& config) {
  WorstCaseReport report = HillClimb(mechanism, spec, config);
  const bool ok = report.best_ratio <= bound + kTolerance;
  return {ok, std::move(report)};
}

}  // namespace fairloc

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

#include "fairloc/oracle.h"

#include <algorithm>
#include <cmath>

#include "fairloc/errors.h"

namespace fairloc {
namespace {

constexpr double kDedupe = 1e-12;

void SortUnique(std::vector<double>& values) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) {
    if (out.empty() || v - out.back() > kDedupe) out.push_back(v);
  }
  values = std::move(out);
}

using Family = std::vector<double>;

// The per-group linear pieces `spec` is assembled from, evaluated at `y`.
std::vector<Family> Families(const GroupedProfile& profile,
                             const ObjectiveSpec& spec, double y) {
  const std::vector<GroupCostSummary> costs = GroupCostsAt(profile, y);
  const std::size_t m = costs.size();
  Family a(m), b(m);
  for (std::size_t j = 0; j < m; ++j) {
    const GroupCostSummary& c = costs[j];
    switch (spec.kind) {
      case ObjectiveKind::kMaxTotalGroupCost:
        a[j] = c.total;
        break;
      case ObjectiveKind::kMaxAverageGroupCost:
        a[j] = c.average;
        break;
      case ObjectiveKind::kIntergroupIntragroupSeparate:
        a[j] = c.average;
        b[j] = c.max - c.min;
        break;
      case ObjectiveKind::kIntergroupIntragroupCombined:
        a[j] = c.average + c.max - c.min;
        break;
      case ObjectiveKind::kGroupCostDifference:
      case ObjectiveKind::kGroupCostRatio:
        a[j] = spec.measure == GroupCostMeasure::kTotal     ? c.total
               : spec.measure == GroupCostMeasure::kAverage ? c.average
                                                            : c.max;
        break;
    }
  }
  if (spec.kind == ObjectiveKind::kIntergroupIntragroupSeparate) {
    return {std::move(a), std::move(b)};
  }
  return {std::move(a)};
}

// Every family member is linear on the segment from `from` to `to`, with
// values `at_from` and `at_to` at its ends. Appends the points where two
// members of the same family cross at parameter t in (0, t_max).
void AddCrossings(double from, double to, const std::vector<Family>& at_from,
                  const std::vector<Family>& at_to, double t_max,
                  std::vector<double>& out) {
  for (std::size_t f = 0; f < at_from.size(); ++f) {
    const Family& u = at_from[f];
    const Family& v = at_to[f];
    for (std::size_t i = 0; i < u.size(); ++i) {
      for (std::size_t k = i + 1; k < u.size(); ++k) {
        const double slope_gap = (v[i] - u[i]) - (v[k] - u[k]);
        if (std::abs(slope_gap) < 1e-15) continue;
        const double t = (u[k] - u[i]) / slope_gap;
        if (t > 0.0 && t < t_max) out.push_back(from + t * (to - from));
      }
    }
  }
}

// Limit of a ratio-form objective as y goes to either infinity: every group
// cost grows like its slope times |y|.
double RayLimit(const GroupedProfile& profile, const ObjectiveSpec& spec) {
  double lo = kInfinity, hi = 0.0;
  for (int j = 1; j <= profile.group_count(); ++j) {
    const double slope = spec.measure == GroupCostMeasure::kTotal
                             ? static_cast<double>(profile.group_size(j))
                             : 1.0;
    lo = std::min(lo, slope);
    hi = std::max(hi, slope);
  }
  return hi / lo;
}

}  // namespace

std::vector<double> Breakpoints(const GroupedProfile& profile) {
  std::vector<double> points;
  for (const Agent& a : profile.agents()) points.push_back(a.location);
  for (std::size_t i = 1; i < profile.size(); ++i) {
    const double lo = profile.agent(i - 1).location;
    const double hi = profile.agent(i).location;
    if (hi > lo) points.push_back((lo + hi) / 2.0);
  }
  for (int j = 1; j <= profile.group_count(); ++j) {
    const auto members = profile.group_locations(j);
    for (std::size_t i = 1; i < members.size(); ++i) {
      points.push_back((members[i - 1] + members[i]) / 2.0);
    }
    points.push_back((members.front() + members.back()) / 2.0);
  }
  SortUnique(points);
  return points;
}

OptimalResult Optimize(const GroupedProfile& profile,
                       const ObjectiveSpec& spec) {
  const std::vector<double> breaks = Breakpoints(profile);
  std::vector<double> candidates = breaks;

  std::vector<std::vector<Family>> families;
  families.reserve(breaks.size());
  for (double y : breaks) families.push_back(Families(profile, spec, y));
  for (std::size_t i = 1; i < breaks.size(); ++i) {
    AddCrossings(breaks[i - 1], breaks[i], families[i - 1], families[i], 1.0,
                 candidates);
  }
  if (spec.is_alternative()) {
    // Differences and ratios of group costs can keep shrinking past the
    // extreme agents, so both rays are searched as well.
    const double lo = profile.leftmost();
    const double hi = profile.rightmost();
    AddCrossings(hi, hi + 1.0, families.back(),
                 Families(profile, spec, hi + 1.0), kInfinity, candidates);
    AddCrossings(lo, lo - 1.0, families.front(),
                 Families(profile, spec, lo - 1.0), kInfinity, candidates);
  }
  SortUnique(candidates);
  // Past the last ray crossing a ratio-form objective is a ratio of two
  // fixed linear functions. It decreases towards the ratio of their slopes
  // without reaching it, so that limit is a candidate value at infinity.
  const double ray_limit = spec.kind == ObjectiveKind::kGroupCostRatio
                               ? RayLimit(profile, spec)
                               : kInfinity;

  std::vector<double> values;
  values.reserve(candidates.size());
  double best = kInfinity;
  for (double y : candidates) {
    values.push_back(EvalPoint(profile, spec, y));
    best = std::min(best, values.back());
  }
  if (ray_limit < best - kTolerance) {
    return {-kInfinity, ray_limit, {-kInfinity, kInfinity}};
  }
  if (std::isinf(best)) {
    throw UnboundedError("objective " + spec.Name() +
                         " is infinite at every candidate location");
  }

  OptimalResult result;
  result.value = best;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (values[i] <= best + kTolerance) {
      if (result.minimizers.empty()) result.location = candidates[i];
      result.minimizers.push_back(candidates[i]);
    }
  }
  return result;
}

OptimalResult GridOptimize(const GroupedProfile& profile,
                           const ObjectiveSpec& spec, int resolution) {
  if (resolution < 2) throw Error("grid resolution must be at least 2");
  const double lo = profile.leftmost();
  const double span = profile.span();
  OptimalResult result;
  result.value = kInfinity;
  result.location = lo;
  for (int i = 0; i < resolution; ++i) {
    const double y =
        i + 1 == resolution ? profile.rightmost()
                            : lo + span * static_cast<double>(i) /
                                       static_cast<double>(resolution - 1);
    const double v = EvalPoint(profile, spec, y);
    if (v < result.value) {
      result.value = v;
      result.location = y;
    }
    if (span == 0.0) break;
  }
  result.minimizers = {result.location};
  return result;
}

double RatioOf(double mechanism_value, double optimal_value) {
  if (optimal_value <= kTolerance) {
    return mechanism_value <= kTolerance ? 1.0 : kInfinity;
  }
  return mechanism_value / optimal_value;
}

RatioReport Ratio(const GroupedProfile& profile, const Mechanism& mechanism,
                  const ObjectiveSpec& spec) {
  RatioReport report;
  report.outcome = mechanism(profile);
  report.mechanism_value = EvalOutcome(profile, spec, report.outcome);
  report.optimal = Optimize(profile, spec);
  report.ratio = RatioOf(report.mechanism_value, report.optimal.value);
  return report;
}

RatioReport Ratio(const GroupedProfile& profile, const MechanismId& mechanism,
                  const ObjectiveSpec& spec) {
  return Ratio(profile, MakeMechanism(mechanism), spec);
}

}  // namespace fairloc

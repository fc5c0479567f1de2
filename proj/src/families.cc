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

#include "fairloc/families.h"

#include <vector>

#include "fairloc/errors.h"

namespace fairloc {
namespace {

void Append(std::vector<double>& group, int count, double location) {
  group.insert(group.end(), static_cast<std::size_t>(count), location);
}

void Require(bool condition, const char* message) {
  if (!condition) throw Error(message);
}

}  // namespace

GroupedProfile TwoSingletons(double a, double b) {
  return ProfileFromGroups({{a}, {b}});
}

GroupedProfile SplitGroupsProfile(int replication, double lo, double hi) {
  Require(replication >= 1, "replication must be positive");
  std::vector<std::vector<double>> groups(2);
  groups[0].push_back(lo);
  Append(groups[0], replication, hi);
  Append(groups[1], replication, lo);
  groups[1].push_back(hi);
  return ProfileFromGroups(groups);
}

GroupedProfile MedianCounterexample(int m) {
  Require(m >= 1, "m must be positive");
  std::vector<std::vector<double>> groups(m);
  for (auto& g : groups) g.push_back(0.0);
  Append(groups[0], m, 1.0);
  return ProfileFromGroups(groups);
}

GroupedProfile LeftmostFamily(int n) {
  Require(n >= 2, "n must be at least 2");
  std::vector<double> g{0.0};
  Append(g, n - 1, 1.0);
  return ProfileFromGroups({g});
}

GroupedProfile SpreadEndpointsFamily(int n) {
  Require(n >= 3, "n must be at least 3");
  std::vector<double> middle;
  Append(middle, n - 2, 0.5);
  return ProfileFromGroups({{0.0}, {1.0}, middle});
}

GroupedProfile SingleGroupEndpointsFamily(int n) {
  Require(n >= 2, "n must be at least 2");
  std::vector<double> g{0.0, 1.0};
  Append(g, n - 2, 0.5);
  return ProfileFromGroups({g});
}

GroupedProfile MajorityGroupTightProfile() {
  return ProfileFromGroups({{0.0, 2.0 / 3.0}, {1.0, 1.0}});
}

GroupedProfile HeavyClusterFamily(int k) {
  Require(k >= 1, "k must be positive");
  std::vector<double> g1;
  Append(g1, k, 0.0);
  Append(g1, k - 1, 2.0 / 3.0);
  return ProfileFromGroups({g1, {1.0}});
}

GroupedProfile SmallGroupMedianFamily(int small_size, int large_size) {
  Require(small_size >= 2 && small_size % 2 == 0,
          "small group size must be even");
  Require(large_size >= 1, "large group size must be positive");
  const double s = small_size;
  const double t = large_size;
  std::vector<double> g1, g2;
  Append(g1, small_size / 2, 0.0);
  Append(g1, small_size / 2, 2.0 * t / (2.0 * t + s));
  Append(g2, large_size, 1.0);
  return ProfileFromGroups({g1, g2});
}

GroupedProfile SmallGroupMedianAverageFamily(int small_size, int other_size) {
  Require(small_size >= 2 && small_size % 2 == 0,
          "small group size must be even");
  Require(other_size >= 1, "other group size must be positive");
  std::vector<double> g1, g2;
  Append(g1, small_size / 2, 0.0);
  Append(g1, small_size / 2, 2.0 / 3.0);
  Append(g2, other_size, 1.0);
  return ProfileFromGroups({g1, g2});
}

}  // namespace fairloc

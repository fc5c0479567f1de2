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

// Parametric profile families on which the mechanisms reach their worst
// known ratios. Group numbering follows the order of the arguments.

#ifndef FAIRLOC_FAMILIES_H_
#define FAIRLOC_FAMILIES_H_

#include "fairloc/model.h"

namespace fairloc {

// G1 = {a}, G2 = {b}.
GroupedProfile TwoSingletons(double a, double b);

// G1 = {lo, hi x replication}, G2 = {lo x replication, hi}.
GroupedProfile SplitGroupsProfile(int replication, double lo, double hi);

// One agent of each of m groups at 0, plus m agents of G1 at 1. The median
// and the median of group medians both land on 0 while the optimum for
// mtgc is 1 with value 1.
GroupedProfile MedianCounterexample(int m);

// One group: one agent at 0 and n - 1 agents at 1.
GroupedProfile LeftmostFamily(int n);

// G1 = {0}, G2 = {1}, G3 = {1/2 x (n - 2)}; requires n >= 3.
GroupedProfile SpreadEndpointsFamily(int n);

// One group: 0, 1 and n - 2 agents at 1/2; requires n >= 2.
GroupedProfile SingleGroupEndpointsFamily(int n);

// G1 = {0, 2/3}, G2 = {1, 1}.
GroupedProfile MajorityGroupTightProfile();

// G1 = {0 x k, 2/3 x (k - 1)}, G2 = {1}; requires k >= 1.
GroupedProfile HeavyClusterFamily(int k);

// G1 = {0 x s/2, (2 t / (2 t + s)) x s/2}, G2 = {1 x t} with s = small_size
// (even) and t = large_size.
GroupedProfile SmallGroupMedianFamily(int small_size, int large_size);

// G1 = {0 x s/2, 2/3 x s/2}, G2 = {1 x other_size}; s even.
GroupedProfile SmallGroupMedianAverageFamily(int small_size, int other_size);

}  // namespace fairloc

#endif  // FAIRLOC_FAMILIES_H_

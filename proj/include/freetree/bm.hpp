// Copyright 2026 The freetree Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <utility>
#include <vector>

#include "freetree/freespace.hpp"
#include "freetree/metric.hpp"
#include "freetree/tree.hpp"

namespace freetree {

// Closed-form lower bound (1 - sep(M)/(4 diam(M)))^{-1} for the Banach-Mazur
// distance between F(M) and l1^n, n = |M|-1. Throws SeparationZero /
// TooFewPoints when the hypotheses fail.
Rat bm_lower_formula(const Metric& m);

// The slope-1-only-at-(x_i, x_j) family: f_ij(z) = d(x_j, pi_ij(z)), rebased
// to vanish at the base, one function per ordered pair of distinct points.
struct PeakingFamily {
  std::vector<std::pair<int, int>> pairs;
  std::vector<LipFunction> fns;
};
PeakingFamily peaking_family(const Metric& m, const Tree& t);

struct BmCertificate {
  Rat formula_bound;
  Rat certified_bound;  // (1 - epsilon)^{-1} >= formula_bound
  Rat epsilon;
  std::vector<int> subset;  // 2n+1 indices into the family
  std::pair<int, int> worst_pair;  // subset pair attaining the max midpoint
  Rat worst_midpoint_norm;
};

// Certified bound from the midpoint argument: picks 2n+1 family members
// minimizing the maximum pairwise midpoint lip-norm (exact subset search for
// small families, greedy with a whole-family floor otherwise).
BmCertificate bm_lower_certified(const Metric& m, const Tree& t);

}  // namespace freetree

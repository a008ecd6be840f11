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

#include <map>
#include <optional>
#include <vector>

#include "freetree/freespace.hpp"
#include "freetree/metric.hpp"
#include "freetree/tree.hpp"

namespace freetree {

// Segment criterion, valid on 0-hyperbolic spaces: (delta_x - delta_y)/d(x,y)
// is extreme in the free-space ball iff no M-point lies strictly inside the
// tree segment [x, y].
bool is_extreme_molecule_segment(const Metric& m, const Tree& t, int x, int y);

// General vertex test: extreme iff the molecule is not a convex combination
// of the other signed molecules (exact feasibility LP).
bool is_extreme_molecule_lp(const Metric& m, int x, int y);

// Dispatches to the segment criterion when a realized tree is supplied.
bool is_extreme_molecule(const Metric& m, const Tree& t, int x, int y);

// Extreme in the unit ball of Lip0(M) iff lip_norm(f) = 1 and the tight
// graph (pairs attaining slope 1) is connected. Throws NormExceedsOne.
bool is_extreme_lip(const Metric& m, const LipFunction& f);

// Independent cross-check: searches for a perturbation h != 0 with
// lip_norm(f + h) <= 1 and lip_norm(f - h) <= 1 via the nullspace of the
// active constraints. Returns false (not extreme) iff one exists.
bool is_extreme_lip_perturbation(const Metric& m, const LipFunction& f);

// Smallest / largest 1-Lipschitz extensions of f from A (which must contain
// the base) to all of M. Throws NotOnePointed.
LipFunction extend_sup(const Metric& m, const std::vector<int>& A,
                       const std::map<int, Rat>& f);
LipFunction extend_inf(const Metric& m, const std::vector<int>& A,
                       const std::map<int, Rat>& f);

// Two extreme molecules at free-norm distance <= 1, built from the three
// closest M-points in distinct branches at a Steiner branching node b.
struct PrimalWitness {
  int x, y, z;
  FreeVector mu, nu;
  Rat dist;
};
PrimalWitness primal_witness(const Metric& m, const Tree& t, int b);

// Two extreme functions f = d(0, .) and the re-glued g at lip-norm distance
// strictly below 2, built from the branch of b that avoids the base.
struct DualWitness {
  int z;
  LipFunction f, g;
  Rat dist;
};
DualWitness dual_witness(const Metric& m, const Tree& t, int b);

struct Certificate {
  enum class Tag { IsometricToL1, NotIsometric, NotZeroHyperbolic };
  Tag tag;

  std::optional<std::array<int, 4>> violation;  // NotZeroHyperbolic
  // IsometricToL1: the coordinate map is the realized tree's edge list; the
  // far-side point sets determine each coordinate.
  std::optional<Tree> tree;
  // NotIsometric
  int branch_node = -1;
  std::optional<PrimalWitness> primal;
  std::optional<DualWitness> dual;
};

Certificate ell1_verdict(const Metric& m);

}  // namespace freetree

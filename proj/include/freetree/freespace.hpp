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
#include <vector>

#include "freetree/metric.hpp"
#include "freetree/tree.hpp"

namespace freetree {

// An element sum a_x * delta_x of the free space, stored as coefficients over
// the non-base points; the base coefficient is implicitly -sum a_x. Zero
// coefficients are dropped.
struct FreeVector {
  std::map<int, Rat> coeff;

  void set(int point, Rat v) {
    if (v == 0)
      coeff.erase(point);
    else
      coeff[point] = std::move(v);
  }
  Rat get(int point) const {
    auto it = coeff.find(point);
    return it == coeff.end() ? Rat(0) : it->second;
  }
  bool is_zero() const { return coeff.empty(); }

  FreeVector& operator+=(const FreeVector& o) {
    for (const auto& [p, v] : o.coeff) set(p, Rat(get(p) + v));
    return *this;
  }
  FreeVector& operator-=(const FreeVector& o) {
    for (const auto& [p, v] : o.coeff) set(p, Rat(get(p) - v));
    return *this;
  }
  FreeVector& operator*=(const Rat& s) {
    if (s == 0) {
      coeff.clear();
      return *this;
    }
    for (auto& [p, v] : coeff) v *= s;
    return *this;
  }
  friend FreeVector operator-(FreeVector a, const FreeVector& b) {
    a -= b;
    return a;
  }
  friend FreeVector operator+(FreeVector a, const FreeVector& b) {
    a += b;
    return a;
  }
};

// (delta_x - delta_y) / d(x, y); either point may be the base.
FreeVector molecule(const Metric& m, int x, int y);

// Base-point-vanishing function on M; values indexed by point.
struct LipFunction {
  std::vector<Rat> values;

  explicit LipFunction(int n = 0) : values(n, Rat(0)) {}
  Rat operator()(int i) const { return values[i]; }
  bool operator==(const LipFunction& o) const { return values == o.values; }
};

// max |f(x)-f(y)| / d(x,y) over pairs; 0 iff f is identically 0.
Rat lip_norm(const Metric& m, const LipFunction& f);

// <sum a_x delta_x, f> = sum a_x f(x)
Rat pairing(const Metric& m, const FreeVector& a, const LipFunction& f);

struct TransportPlanEntry {
  int from, to;
  Rat amount;
};

// Exact optimal-transport value with certificates: an optimal plan moving the
// positive part onto the negative part, and a Kantorovich dual witness f*
// with lip_norm(f*) <= 1 and pairing(a, f*) == cost.
struct TransportResult {
  Rat cost;
  std::vector<TransportPlanEntry> plan;
  LipFunction dual;
};

TransportResult free_norm_certified(const Metric& m, const FreeVector& a);
Rat free_norm(const Metric& m, const FreeVector& a);

// Edge-flow norm on the realized tree: sum over edges of len * |net flow|.
// Agrees with free_norm exactly on 0-hyperbolic spaces.
Rat free_norm_tree(const Metric& m, const Tree& t, const FreeVector& a);

// Per-edge coordinates len * (net flow), in the tree's edge order. The l1
// norm of the output always equals free_norm; the coordinate count is
// |M| - 1 exactly when the tree has no Steiner branching nodes.
std::vector<Rat> godard_embed(const Metric& m, const Tree& t,
                              const FreeVector& a);

}  // namespace freetree

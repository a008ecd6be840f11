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

#include <string>
#include <vector>

#include "freetree/freespace.hpp"
#include "freetree/generators.hpp"
#include "freetree/metric.hpp"

namespace fixtures {

using freetree::FreeVector;
using freetree::Metric;
using freetree::Rat;

inline Metric from_matrix(std::vector<std::string> labels, int base,
                          std::vector<std::vector<long>> d) {
  int n = static_cast<int>(labels.size());
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = Rat(d[i][j]);
  return Metric::validate(std::move(labels), base, std::move(m));
}

// Equilateral triangle with unit sides, base "0".
inline Metric m3() {
  return from_matrix({"0", "a", "b"}, 0, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

// Three collinear points 0, 1, 2 on the line.
inline Metric path3() {
  return from_matrix({"0", "1", "2"}, 0, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
}

// Shortest-path metric of the 4-cycle: adjacent 1, opposite 2.
inline Metric c4() {
  return from_matrix({"p0", "p1", "p2", "p3"}, 0,
                     {{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}});
}

// Isosceles tripod: d(0,a) = d(0,b) = 2, d(a,b) = 1.
inline Metric u3() {
  return from_matrix({"0", "a", "b"}, 0, {{0, 2, 2}, {2, 0, 1}, {2, 1, 0}});
}

// Star with center c in M and three unit legs.
inline Metric star4() {
  return from_matrix({"c", "x", "y", "z"}, 0,
                     {{0, 1, 1, 1}, {1, 0, 2, 2}, {1, 2, 0, 2}, {1, 2, 2, 0}});
}

// Random FreeVector with small rational coefficients over a random subset of
// the non-base points; may be zero.
inline FreeVector random_vector(const Metric& m, freetree::Rng& rng) {
  FreeVector a;
  for (int i = 0; i < m.size(); ++i) {
    if (i == m.base() || rng.below(3) == 0) continue;
    Rat v(rng.range(-6, 6), 1 + rng.below(3));
    v.canonicalize();
    a.set(i, v);
  }
  return a;
}

}  // namespace fixtures

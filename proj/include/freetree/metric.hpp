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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "freetree/errors.hpp"
#include "freetree/rational.hpp"

namespace freetree {

// A finite pointed metric space: distinct labels, a distinguished base point,
// and an exact rational distance matrix. Immutable once validated; all
// operations on it are pure.
class Metric {
 public:
  // Checks all metric axioms and throws MetricError on the first violation.
  static Metric validate(std::vector<std::string> labels, int base,
                         std::vector<std::vector<Rat>> dist);

  int size() const { return static_cast<int>(labels_.size()); }
  int base() const { return base_; }
  const Rat& d(int i, int j) const { return dist_[i][j]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::vector<Rat>>& matrix() const { return dist_; }

  // Index of a label, or -1.
  int index_of(const std::string& label) const;

  // Point indices in label-sorted order (the canonical traversal order).
  std::vector<int> sorted_order() const;

 private:
  Metric(std::vector<std::string> labels, int base,
         std::vector<std::vector<Rat>> dist)
      : labels_(std::move(labels)), base_(base), dist_(std::move(dist)) {}

  std::vector<std::string> labels_;
  int base_;
  std::vector<std::vector<Rat>> dist_;
};

// nullopt = the 4-point condition holds. A returned quadruple (a,b,c,d)
// satisfies d(a,b)+d(c,d) > max{d(a,c)+d(b,d), d(a,d)+d(b,c)}.
std::optional<std::array<int, 4>> four_point_violation(const Metric& m);

// nullopt = the strong triangle inequality holds. A returned triple (x,y,z)
// satisfies d(x,y) > max{d(x,z), d(y,z)}.
std::optional<std::array<int, 3>> ultrametric_violation(const Metric& m);

// Half the minimum of d(x,y)+d(x,z)-d(y,z) over distinct triples. May be 0.
// Throws TooFewPoints when |M| < 3.
Rat sep(const Metric& m);

Rat diam(const Metric& m);

// (x|y)_w = (d(x,w)+d(y,w)-d(x,y))/2
Rat gromov_product(const Metric& m, int x, int y, int w);

}  // namespace freetree

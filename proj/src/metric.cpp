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

#include "freetree/metric.hpp"

#include <algorithm>
#include <set>

namespace freetree {

Metric Metric::validate(std::vector<std::string> labels, int base,
                        std::vector<std::vector<Rat>> dist) {
  const int n = static_cast<int>(labels.size());
  if (n == 0)
    throw MetricError(MetricErrorCode::BadShape, {-1, -1, -1}, "empty space");
  {
    std::set<std::string> seen;
    for (int i = 0; i < n; ++i)
      if (!seen.insert(labels[i]).second)
        throw MetricError(MetricErrorCode::DuplicateLabel, {i, -1, -1},
                          "duplicate label '" + labels[i] + "'");
  }
  if (base < 0 || base >= n)
    throw MetricError(MetricErrorCode::BadBase, {base, -1, -1},
                      "base index out of range");
  if (static_cast<int>(dist.size()) != n)
    throw MetricError(MetricErrorCode::BadShape, {-1, -1, -1},
                      "matrix row count != label count");
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(dist[i].size()) != n)
      throw MetricError(MetricErrorCode::BadShape, {i, -1, -1},
                        "matrix row length != label count");

  for (int i = 0; i < n; ++i)
    if (dist[i][i] != 0)
      throw MetricError(MetricErrorCode::NonzeroDiagonal, {i, i, -1},
                        "d(" + labels[i] + "," + labels[i] + ") != 0");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] != dist[j][i])
        throw MetricError(MetricErrorCode::NotSymmetric, {i, j, -1},
                          "d(" + labels[i] + "," + labels[j] + ") != d(" +
                              labels[j] + "," + labels[i] + ")");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist[i][j] <= 0)
        throw MetricError(MetricErrorCode::NegativeOrZeroOffDiagonal,
                          {i, j, -1},
                          "d(" + labels[i] + "," + labels[j] + ") <= 0");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (dist[i][j] > dist[i][k] + dist[k][j])
          throw MetricError(MetricErrorCode::TriangleViolation, {i, j, k},
                            "d(" + labels[i] + "," + labels[j] + ") > d(" +
                                labels[i] + "," + labels[k] + ") + d(" +
                                labels[k] + "," + labels[j] + ")");
      }
    }
  return Metric(std::move(labels), base, std::move(dist));
}

int Metric::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

std::vector<int> Metric::sorted_order() const {
  std::vector<int> order(labels_.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels_[a] < labels_[b]; });
  return order;
}

std::optional<std::array<int, 4>> four_point_violation(const Metric& m) {
  const int n = m.size();
  // Quadruples with a repeated point never violate, so scan 4-subsets. For
  // each, the condition holds iff the two largest of the three pair-sums
  // are equal; a violation is a strictly maximal pairing.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int e = c + 1; e < n; ++e) {
          Rat s1 = m.d(a, b) + m.d(c, e);
          Rat s2 = m.d(a, c) + m.d(b, e);
          Rat s3 = m.d(a, e) + m.d(b, c);
          if (s1 > s2 && s1 > s3) return std::array<int, 4>{a, b, c, e};
          if (s2 > s1 && s2 > s3) return std::array<int, 4>{a, c, b, e};
          if (s3 > s1 && s3 > s2) return std::array<int, 4>{a, e, b, c};
        }
  return std::nullopt;
}

std::optional<std::array<int, 3>> ultrametric_violation(const Metric& m) {
  const int n = m.size();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (z == x || z == y) continue;
        if (m.d(x, y) > std::max(m.d(x, z), m.d(y, z)))
          return std::array<int, 3>{x, y, z};
      }
  return std::nullopt;
}

Rat sep(const Metric& m) {
  const int n = m.size();
  if (n < 3) throw TooFewPoints();
  std::optional<Rat> best;
  // d(x,y)+d(x,z)-d(y,z) is symmetric in y,z, so scan x against y < z.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (y == x) continue;
      for (int z = y + 1; z < n; ++z) {
        if (z == x) continue;
        Rat v = m.d(x, y) + m.d(x, z) - m.d(y, z);
        if (!best || v < *best) best = v;
      }
    }
  return Rat(*best / 2);
}

Rat diam(const Metric& m) {
  Rat best = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (m.d(i, j) > best) best = m.d(i, j);
  return best;
}

Rat gromov_product(const Metric& m, int x, int y, int w) {
  return Rat((m.d(x, w) + m.d(y, w) - m.d(x, y)) / 2);
}

}  // namespace freetree

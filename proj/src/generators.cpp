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

#include "freetree/generators.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace freetree {

namespace {

std::vector<std::string> make_labels(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    std::string s = std::to_string(i);
    while (s.size() < 2) s = "0" + s;
    labels.push_back("p" + s);
  }
  return labels;
}

Rat random_len(Rng& rng) {
  int64_t num = rng.range(1, 8);
  int64_t den = int64_t{1} << rng.range(0, 2);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Metric gen_tree_metric(int size, uint64_t seed) {
  if (size < 2) throw std::invalid_argument("tree metric needs size >= 2");
  Rng rng(seed);
  const int total = size + size / 2;
  // Random attachment tree with random rational edge lengths.
  std::vector<int> parent(total, -1);
  std::vector<Rat> plen(total, Rat(0));
  for (int i = 1; i < total; ++i) {
    parent[i] = static_cast<int>(rng.below(i));
    plen[i] = random_len(rng);
  }
  // Sample `size` node positions (leaves and internal nodes alike).
  std::vector<int> ids(total);
  for (int i = 0; i < total; ++i) ids[i] = i;
  for (int i = total - 1; i > 0; --i)
    std::swap(ids[i], ids[rng.below(i + 1)]);
  ids.resize(size);
  std::sort(ids.begin(), ids.end());

  // Path distances via root depths and lowest common ancestors.
  std::vector<Rat> depth(total, Rat(0));
  std::vector<int> level(total, 0);
  for (int i = 1; i < total; ++i) {
    depth[i] = depth[parent[i]] + plen[i];
    level[i] = level[parent[i]] + 1;
  }
  auto dist = [&](int a, int b) {
    int x = a, y = b;
    while (level[x] > level[y]) x = parent[x];
    while (level[y] > level[x]) y = parent[y];
    while (x != y) {
      x = parent[x];
      y = parent[y];
    }
    return Rat(depth[a] + depth[b] - 2 * depth[x]);
  };
  std::vector<std::vector<Rat>> d(size, std::vector<Rat>(size, Rat(0)));
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j) d[i][j] = d[j][i] = dist(ids[i], ids[j]);
  return Metric::validate(make_labels(size), 0, std::move(d));
}

Metric gen_ultrametric(int size, uint64_t seed) {
  if (size < 2) throw std::invalid_argument("ultrametric needs size >= 2");
  Rng rng(seed);
  std::vector<std::vector<int>> clusters;
  for (int i = 0; i < size; ++i) clusters.push_back({i});
  std::vector<std::vector<Rat>> d(size, std::vector<Rat>(size, Rat(0)));
  Rat h = 0;
  while (clusters.size() > 1) {
    // Strictly increasing merge heights keep the strong triangle inequality.
    int64_t num = rng.range(1, 4);
    int64_t den = int64_t{1} << rng.range(0, 1);
    Rat step(num, den);
    step.canonicalize();
    h += step;
    size_t i = rng.below(clusters.size());
    size_t j = rng.below(clusters.size() - 1);
    if (j >= i) ++j;
    if (i > j) std::swap(i, j);
    for (int a : clusters[i])
      for (int b : clusters[j]) d[a][b] = d[b][a] = h;
    clusters[i].insert(clusters[i].end(), clusters[j].begin(),
                       clusters[j].end());
    clusters.erase(clusters.begin() + j);
  }
  return Metric::validate(make_labels(size), 0, std::move(d));
}

Metric gen_cycle_metric(int size, uint64_t seed) {
  if (size < 4) throw std::invalid_argument("cycle metric needs size >= 4");
  for (uint64_t attempt = 0;; ++attempt) {
    Rng rng(seed + attempt * 0x9e3779b97f4a7c15ULL);
    // Weights in [1, 2] keep every quadruple of a 4-cycle in violation; for
    // longer cycles we re-draw in the (unseen) case a sample is tree-like.
    std::vector<Rat> w(size);
    Rat total = 0;
    for (int i = 0; i < size; ++i) {
      Rat r(8 + rng.range(0, 8), 8);
      r.canonicalize();
      w[i] = r;
      total += r;
    }
    std::vector<Rat> pre(size + 1, Rat(0));
    for (int i = 0; i < size; ++i) pre[i + 1] = pre[i] + w[i];
    std::vector<std::vector<Rat>> d(size, std::vector<Rat>(size, Rat(0)));
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j) {
        Rat arc = pre[j] - pre[i];
        Rat other = total - arc;
        d[i][j] = d[j][i] = arc < other ? arc : other;
      }
    Metric m = Metric::validate(make_labels(size), 0, std::move(d));
    if (four_point_violation(m)) return m;
  }
}

}  // namespace

Metric gen_instance(const std::string& kind, int size, uint64_t seed) {
  if (kind == "random-tree-metric") return gen_tree_metric(size, seed);
  if (kind == "random-ultrametric") return gen_ultrametric(size, seed);
  if (kind == "perturbed-non-hyperbolic") return gen_cycle_metric(size, seed);
  throw std::invalid_argument("unknown instance kind '" + kind + "'");
}

Json gen_instance_json(const std::string& kind, int size, uint64_t seed) {
  return space_to_json(gen_instance(kind, size, seed));
}

}  // namespace freetree

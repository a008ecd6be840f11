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

#include "freetree/bm.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace freetree {

Rat bm_lower_formula(const Metric& m) {
  if (m.size() < 3) throw TooFewPoints();
  Rat s = sep(m);
  if (s == 0) throw SeparationZero();
  return Rat(1) / Rat(1 - s / (4 * diam(m)));
}

PeakingFamily peaking_family(const Metric& m, const Tree& t) {
  (void)t;  // the tree certifies 0-hyperbolicity; projections reduce to
            // Gromov products in the metric
  if (m.size() < 3) throw TooFewPoints();
  if (sep(m) == 0) throw SeparationZero();
  PeakingFamily fam;
  const int n = m.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      LipFunction f(n);
      for (int z = 0; z < n; ++z)
        f.values[z] = Rat((m.d(i, j) + m.d(j, z) - m.d(i, z)) / 2);
      Rat at_base = f(m.base());
      for (auto& v : f.values) v -= at_base;
      fam.pairs.push_back({i, j});
      fam.fns.push_back(std::move(f));
    }
  return fam;
}

namespace {

// Lexicographically smallest k-clique in the graph of pairs with midpoint
// norm <= threshold, or empty. Vertices are tried in increasing order.
bool find_clique(const std::vector<std::vector<char>>& ok, int k, int from,
                 std::vector<int>& cur) {
  if (static_cast<int>(cur.size()) == k) return true;
  const int nv = static_cast<int>(ok.size());
  for (int v = from; v < nv; ++v) {
    if (nv - v < k - static_cast<int>(cur.size())) return false;
    bool fits = true;
    for (int u : cur)
      if (!ok[u][v]) {
        fits = false;
        break;
      }
    if (!fits) continue;
    cur.push_back(v);
    if (find_clique(ok, k, v + 1, cur)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

BmCertificate bm_lower_certified(const Metric& m, const Tree& t) {
  const int n = m.size() - 1;
  if (n < 2) throw TooFewPoints();
  PeakingFamily fam = peaking_family(m, t);  // throws SeparationZero
  const int nf = static_cast<int>(fam.fns.size());
  const int k = 2 * n + 1;
  assert(nf >= k);

  std::vector<std::vector<Rat>> mid(nf, std::vector<Rat>(nf, Rat(0)));
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) {
      LipFunction h(m.size());
      for (int z = 0; z < m.size(); ++z)
        h.values[z] = Rat((fam.fns[i](z) + fam.fns[j](z)) / 2);
      mid[i][j] = mid[j][i] = lip_norm(m, h);
    }

  std::vector<int> subset;
  if (nf <= 30) {
    // Exact min-max subset: ascending threshold search over the distinct
    // midpoint values, taking the first that admits a k-clique.
    std::set<Rat> values;
    for (int i = 0; i < nf; ++i)
      for (int j = i + 1; j < nf; ++j) values.insert(mid[i][j]);
    for (const Rat& thr : values) {
      std::vector<std::vector<char>> ok(nf, std::vector<char>(nf, 0));
      for (int i = 0; i < nf; ++i)
        for (int j = 0; j < nf; ++j)
          ok[i][j] = i != j && mid[i][j] <= thr;
      // (k-1)-core reduction kills most infeasible thresholds outright.
      bool shrunk = true;
      std::vector<char> alive(nf, 1);
      while (shrunk) {
        shrunk = false;
        for (int i = 0; i < nf; ++i) {
          if (!alive[i]) continue;
          int deg = 0;
          for (int j = 0; j < nf; ++j) deg += alive[j] && ok[i][j];
          if (deg < k - 1) {
            alive[i] = 0;
            for (int j = 0; j < nf; ++j) ok[i][j] = ok[j][i] = 0;
            shrunk = true;
          }
        }
      }
      int remaining = 0;
      for (int i = 0; i < nf; ++i) remaining += alive[i];
      if (remaining < k) continue;
      std::vector<int> cur;
      if (find_clique(ok, k, 0, cur)) {
        subset = cur;
        break;
      }
    }
  } else {
    // Greedy: seed with the best pair, then add the function that keeps the
    // running maximum midpoint norm smallest. Any subset certifies, so the
    // whole-family maximum is a guaranteed floor; greedy never exceeds it.
    int bi = 0, bj = 1;
    for (int i = 0; i < nf; ++i)
      for (int j = i + 1; j < nf; ++j)
        if (mid[i][j] < mid[bi][bj]) {
          bi = i;
          bj = j;
        }
    subset = {bi, bj};
    std::vector<char> used(nf, 0);
    used[bi] = used[bj] = 1;
    while (static_cast<int>(subset.size()) < k) {
      int best = -1;
      Rat best_max = 0;
      for (int c = 0; c < nf; ++c) {
        if (used[c]) continue;
        Rat mx = 0;
        for (int u : subset)
          if (mid[u][c] > mx) mx = mid[u][c];
        if (best < 0 || mx < best_max) {
          best = c;
          best_max = mx;
        }
      }
      used[best] = 1;
      subset.push_back(best);
    }
    std::sort(subset.begin(), subset.end());
  }
  assert(static_cast<int>(subset.size()) == k);

  BmCertificate cert;
  cert.formula_bound = bm_lower_formula(m);
  cert.worst_midpoint_norm = 0;
  cert.worst_pair = {subset[0], subset[1]};
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      if (mid[subset[i]][subset[j]] > cert.worst_midpoint_norm) {
        cert.worst_midpoint_norm = mid[subset[i]][subset[j]];
        cert.worst_pair = {subset[i], subset[j]};
      }
  cert.subset = std::move(subset);
  assert(cert.worst_midpoint_norm > 0 && cert.worst_midpoint_norm < 1);
  cert.epsilon = Rat(1 - cert.worst_midpoint_norm);
  cert.certified_bound = Rat(1) / cert.worst_midpoint_norm;
  assert(cert.certified_bound >= cert.formula_bound);
  return cert;
}

}  // namespace freetree

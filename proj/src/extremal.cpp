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

#include "freetree/extremal.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

#include "freetree/simplex.hpp"

namespace freetree {

bool is_extreme_molecule_segment(const Metric& m, const Tree& t, int x,
                                 int y) {
  assert(x != y);
  return t.segment_interior_points(x, y).empty();
}

bool is_extreme_molecule_lp(const Metric& m, int x, int y) {
  assert(x != y);
  const int n = m.size();
  // Coordinates over non-base points; column per signed molecule other than
  // (x, y) itself, plus a convexity row.
  std::vector<int> coord(n, -1);
  int dim = 0;
  for (int i = 0; i < n; ++i)
    if (i != m.base()) coord[i] = dim++;
  std::vector<std::vector<Rat>> A(dim + 1);
  for (auto& row : A) row = {};
  std::vector<std::vector<Rat>> cols;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (p == q || (p == x && q == y)) continue;
      std::vector<Rat> col(dim + 1, Rat(0));
      Rat inv = Rat(1) / m.d(p, q);
      if (coord[p] >= 0) col[coord[p]] += inv;
      if (coord[q] >= 0) col[coord[q]] -= inv;
      col[dim] = 1;
      cols.push_back(std::move(col));
    }
  std::vector<std::vector<Rat>> mat(dim + 1,
                                    std::vector<Rat>(cols.size(), Rat(0)));
  for (size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r <= dim; ++r) mat[r][c] = cols[c][r];
  std::vector<Rat> rhs(dim + 1, Rat(0));
  Rat inv = Rat(1) / m.d(x, y);
  if (coord[x] >= 0) rhs[coord[x]] += inv;
  if (coord[y] >= 0) rhs[coord[y]] -= inv;
  rhs[dim] = 1;
  return !feasible_nonneg_solution(mat, rhs);
}

bool is_extreme_molecule(const Metric& m, const Tree& t, int x, int y) {
  return is_extreme_molecule_segment(m, t, x, y);
}

namespace {

std::vector<std::pair<int, int>> tight_pairs(const Metric& m,
                                             const LipFunction& f) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      if (rat_abs(Rat(f(i) - f(j))) == m.d(i, j)) out.push_back({i, j});
  return out;
}

}  // namespace

bool is_extreme_lip(const Metric& m, const LipFunction& f) {
  Rat norm = lip_norm(m, f);
  if (norm > 1) throw NormExceedsOne();
  if (norm < 1) return false;
  // Connectivity of the tight graph over all of M.
  std::vector<std::vector<int>> adj(m.size());
  for (auto [i, j] : tight_pairs(m, f)) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(m.size(), 0);
  std::deque<int> q{m.base()};
  seen[m.base()] = 1;
  int reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = 1;
        ++reached;
        q.push_back(v);
      }
  }
  return reached == m.size();
}

bool is_extreme_lip_perturbation(const Metric& m, const LipFunction& f) {
  Rat norm = lip_norm(m, f);
  if (norm > 1) throw NormExceedsOne();
  if (m.size() == 1) return false;
  const int n = m.size();

  // Nullspace of the active constraints: h(base) = 0 and h(i) = h(j) on
  // every tight pair. Gaussian elimination over the non-base coordinates.
  std::vector<int> coord(n, -1);
  int dim = 0;
  for (int i = 0; i < n; ++i)
    if (i != m.base()) coord[i] = dim++;
  std::vector<std::vector<Rat>> rows;
  for (auto [i, j] : tight_pairs(m, f)) {
    std::vector<Rat> row(dim, Rat(0));
    if (coord[i] >= 0) row[coord[i]] += 1;
    if (coord[j] >= 0) row[coord[j]] -= 1;
    rows.push_back(std::move(row));
  }
  std::vector<int> pivot_of_col(dim, -1);
  int rank = 0;
  for (auto& row : rows) {
    for (int c = 0; c < dim; ++c) {
      if (row[c] == 0) continue;
      if (pivot_of_col[c] >= 0) {
        Rat factor = row[c] / rows[pivot_of_col[c]][c];
        for (int k = c; k < dim; ++k) row[k] -= factor * rows[pivot_of_col[c]][k];
      } else {
        pivot_of_col[c] = static_cast<int>(&row - rows.data());
        ++rank;
        break;
      }
    }
  }
  if (rank == dim) return true;  // only h = 0 satisfies the active system

  // Build an explicit nullspace direction from the first free column by
  // back-substitution, then scale it into the slack of the inactive
  // constraints and confirm that f +- eps*h stays feasible.
  int free_col = 0;
  while (pivot_of_col[free_col] >= 0) ++free_col;
  std::vector<Rat> h(dim, Rat(0));
  h[free_col] = 1;
  for (int c = dim - 1; c >= 0; --c) {
    int r = pivot_of_col[c];
    if (r < 0) continue;
    Rat s = 0;
    for (int k = c + 1; k < dim; ++k) s += rows[r][k] * h[k];
    h[c] = -s / rows[r][c];
  }
  LipFunction hf(n);
  for (int i = 0; i < n; ++i)
    if (coord[i] >= 0) hf.values[i] = h[coord[i]];

  std::optional<Rat> eps;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Rat dh = rat_abs(Rat(hf(i) - hf(j)));
      if (dh == 0) continue;
      Rat slack = m.d(i, j) - rat_abs(Rat(f(i) - f(j)));
      assert(slack > 0 && "tight pairs have dh == 0 by construction");
      Rat cand = slack / dh;
      if (!eps || cand < *eps) eps = cand;
    }
  if (!eps) return false;  // h itself never strains any constraint
  LipFunction plus(n), minus(n);
  for (int i = 0; i < n; ++i) {
    plus.values[i] = f(i) + *eps * hf(i);
    minus.values[i] = f(i) - *eps * hf(i);
  }
  assert(lip_norm(m, plus) <= 1 && lip_norm(m, minus) <= 1);
  return false;
}

namespace {

LipFunction extend_impl(const Metric& m, const std::vector<int>& A,
                        const std::map<int, Rat>& f, bool sup) {
  bool has_base = false;
  for (int z : A) has_base = has_base || z == m.base();
  if (!has_base) throw NotOnePointed();
  LipFunction out(m.size());
  for (int x = 0; x < m.size(); ++x) {
    std::optional<Rat> best;
    for (int z : A) {
      Rat fz = f.count(z) ? f.at(z) : Rat(0);
      Rat v = sup ? Rat(fz - m.d(z, x)) : Rat(fz + m.d(z, x));
      if (!best || (sup ? v > *best : v < *best)) best = v;
    }
    out.values[x] = *best;
  }
  return out;
}

}  // namespace

LipFunction extend_sup(const Metric& m, const std::vector<int>& A,
                       const std::map<int, Rat>& f) {
  return extend_impl(m, A, f, true);
}

LipFunction extend_inf(const Metric& m, const std::vector<int>& A,
                       const std::map<int, Rat>& f) {
  return extend_impl(m, A, f, false);
}

namespace {

// For each branch at b: the M-point closest to b, ties broken by label.
// Branches come back sorted by (distance of representative, label).
struct BranchRep {
  int point;
  Rat dist;
  size_t branch;
};

std::vector<BranchRep> branch_reps(const Metric& m, const Tree& t, int b) {
  std::vector<BranchRep> reps;
  auto branches = t.branches_at(b);
  for (size_t k = 0; k < branches.size(); ++k) {
    const auto& br = branches[k];
    assert(!br.points.empty() && "every branch contains an M-point");
    int best = -1;
    for (int p : br.points) {
      if (best < 0) {
        best = p;
        continue;
      }
      Rat dp = t.node_distance(b, t.node_of_point(p));
      Rat db = t.node_distance(b, t.node_of_point(best));
      if (dp < db || (dp == db && m.label(p) < m.label(best))) best = p;
    }
    reps.push_back({best, t.node_distance(b, t.node_of_point(best)), k});
  }
  std::sort(reps.begin(), reps.end(), [&](const BranchRep& a,
                                          const BranchRep& c) {
    return a.dist < c.dist ||
           (a.dist == c.dist && m.label(a.point) < m.label(c.point));
  });
  return reps;
}

void require_missing(const Tree& t, int b) {
  auto missing = t.missing_branch_points();
  if (std::find(missing.begin(), missing.end(), b) == missing.end())
    throw NoMissingBranchPoint();
}

}  // namespace

PrimalWitness primal_witness(const Metric& m, const Tree& t, int b) {
  require_missing(t, b);
  auto reps = branch_reps(m, t, b);
  int p1 = reps[0].point, p2 = reps[1].point, p3 = reps[2].point;

  // Order the three candidates so that d(x,z) <= d(z,y) <= d(x,y): take the
  // pair realizing the maximum distance as (x, y), the remaining point as z.
  std::array<std::array<int, 3>, 3> splits = {{{p1, p2, p3},   // x,y | z
                                               {p1, p3, p2},
                                               {p2, p3, p1}}};
  std::array<int, 3> best = splits[0];
  for (const auto& s : splits)
    if (m.d(s[0], s[1]) > m.d(best[0], best[1])) best = s;
  int x = best[0], y = best[1], z = best[2];
  if (m.d(x, z) > m.d(z, y)) std::swap(x, y);

  PrimalWitness w;
  w.x = x;
  w.y = y;
  w.z = z;
  w.mu = molecule(m, x, y);
  w.nu = molecule(m, z, y);
  w.dist = free_norm(m, w.mu - w.nu);
  return w;
}

DualWitness dual_witness(const Metric& m, const Tree& t, int b) {
  require_missing(t, b);
  auto branches = t.branches_at(b);
  size_t base_branch = branches.size();
  for (size_t k = 0; k < branches.size(); ++k)
    for (int node : branches[k].nodes)
      if (node == t.base_node()) base_branch = k;
  assert(base_branch < branches.size());

  // z minimizes d(b, .) over the branches that avoid the base, ties by label.
  int z = -1;
  size_t z_branch = 0;
  for (size_t k = 0; k < branches.size(); ++k) {
    if (k == base_branch) continue;
    for (int p : branches[k].points) {
      if (z < 0) {
        z = p;
        z_branch = k;
        continue;
      }
      Rat dp = t.node_distance(b, t.node_of_point(p));
      Rat dz = t.node_distance(b, t.node_of_point(z));
      if (dp < dz || (dp == dz && m.label(p) < m.label(z))) {
        z = p;
        z_branch = k;
      }
    }
  }

  const int n = m.size();
  std::vector<char> in_mz(n, 0);
  for (int p : branches[z_branch].points) in_mz[p] = 1;

  DualWitness w;
  w.z = z;
  w.f = LipFunction(n);
  w.g = LipFunction(n);
  Rat d0b = t.node_distance(t.base_node(), b);
  Rat dbz = t.node_distance(b, t.node_of_point(z));
  for (int p = 0; p < n; ++p) {
    w.f.values[p] = m.d(m.base(), p);
    w.g.values[p] = in_mz[p] ? Rat(d0b - dbz + m.d(z, p)) : w.f.values[p];
  }
  LipFunction diff(n);
  for (int p = 0; p < n; ++p) diff.values[p] = w.f(p) - w.g(p);
  w.dist = lip_norm(m, diff);
  return w;
}

Certificate ell1_verdict(const Metric& m) {
  Certificate c;
  if (auto q = four_point_violation(m)) {
    c.tag = Certificate::Tag::NotZeroHyperbolic;
    c.violation = *q;
    return c;
  }
  Tree t = Tree::realize(m);
  auto missing = t.missing_branch_points();
  if (missing.empty()) {
    c.tag = Certificate::Tag::IsometricToL1;
    c.tree = std::move(t);
    return c;
  }
  c.tag = Certificate::Tag::NotIsometric;
  c.branch_node = missing.front();
  c.primal = primal_witness(m, t, c.branch_node);
  c.dual = dual_witness(m, t, c.branch_node);
  c.tree = std::move(t);
  return c;
}

}  // namespace freetree

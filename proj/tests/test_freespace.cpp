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

#include <doctest.h>

#include "fixtures.hpp"
#include "freetree/freespace.hpp"
#include "freetree/generators.hpp"
#include "freetree/tree.hpp"

using namespace freetree;

namespace {

// Brute-force transport oracle: enumerate extreme plans recursively by
// matching the first remaining supply against every remaining demand. Every
// vertex of the transportation polytope arises this way, so the minimum over
// the recursion is the exact optimum. Test-only; exponential in |M|.
Rat brute_force_min(const Metric& m, std::vector<std::pair<int, Rat>>& sup,
                    std::vector<std::pair<int, Rat>>& dem) {
  size_t si = 0;
  while (si < sup.size() && sup[si].second == 0) ++si;
  if (si == sup.size()) return Rat(0);
  Rat best;
  bool first = true;
  for (size_t di = 0; di < dem.size(); ++di) {
    if (dem[di].second == 0) continue;
    Rat amt = sup[si].second < dem[di].second ? sup[si].second
                                              : dem[di].second;
    sup[si].second -= amt;
    dem[di].second -= amt;
    Rat cand = Rat(amt * m.d(sup[si].first, dem[di].first)) +
               brute_force_min(m, sup, dem);
    sup[si].second += amt;
    dem[di].second += amt;
    if (first || cand < best) {
      best = cand;
      first = false;
    }
  }
  return best;
}

Rat brute_force_norm(const Metric& m, const FreeVector& a) {
  std::vector<std::pair<int, Rat>> sup, dem;
  Rat total = 0;
  for (const auto& [p, v] : a.coeff) {
    total += v;
    if (v > 0)
      sup.push_back({p, v});
    else
      dem.push_back({p, Rat(-v)});
  }
  if (total > 0)
    dem.push_back({m.base(), total});
  else if (total < 0)
    sup.push_back({m.base(), Rat(-total)});
  return brute_force_min(m, sup, dem);
}

void check_certificates(const Metric& m, const FreeVector& a) {
  TransportResult r = free_norm_certified(m, a);
  // Plan marginals reproduce the signed measure.
  std::vector<Rat> net(m.size(), Rat(0));
  for (const auto& e : r.plan) {
    CHECK(e.amount > 0);
    net[e.from] += e.amount;
    net[e.to] -= e.amount;
  }
  Rat total = 0, cost = 0;
  for (const auto& [p, v] : a.coeff) total += v;
  for (int i = 0; i < m.size(); ++i) {
    Rat want = i == m.base() ? Rat(-total) : a.get(i);
    CHECK(net[i] == want);
  }
  for (const auto& e : r.plan) cost += e.amount * m.d(e.from, e.to);
  CHECK(cost == r.cost);
  // Kantorovich dual: 1-Lipschitz, vanishes at base, pairing attains cost.
  CHECK(r.dual(m.base()) == 0);
  CHECK(lip_norm(m, r.dual) <= 1);
  CHECK(pairing(m, a, r.dual) == r.cost);
}

}  // namespace

TEST_CASE("lip_norm frozen values") {
  const Metric m = fixtures::m3();
  LipFunction d0(3);
  for (int i = 0; i < 3; ++i) d0.values[i] = m.d(m.base(), i);
  CHECK(lip_norm(m, d0) == 1);
  CHECK(lip_norm(m, LipFunction(3)) == 0);
  LipFunction f(3);
  f.values[m.index_of("a")] = 1;
  CHECK(lip_norm(m, f) == 1);
}

TEST_CASE("free_norm frozen values") {
  const Metric m = fixtures::m3();
  FreeVector da;
  da.set(m.index_of("a"), Rat(1));
  CHECK(free_norm(m, da) == 1);
  FreeVector ab = molecule(m, m.index_of("a"), m.index_of("b"));
  CHECK(free_norm(m, ab) == 1);

  const Metric p = fixtures::path3();
  FreeVector v;
  v.set(p.index_of("1"), Rat(1));
  v.set(p.index_of("2"), Rat(1));
  CHECK(free_norm(p, v) == 3);
  CHECK(free_norm(p, FreeVector{}) == 0);
}

TEST_CASE("pairing frozen values") {
  const Metric m = fixtures::m3();
  FreeVector da;
  da.set(m.index_of("a"), Rat(1));
  LipFunction d0(3);
  for (int i = 0; i < 3; ++i) d0.values[i] = m.d(m.base(), i);
  CHECK(pairing(m, da, d0) == 1);
  LipFunction f(3);
  f.values[m.index_of("a")] = 1;
  FreeVector ab = molecule(m, m.index_of("a"), m.index_of("b"));
  CHECK(pairing(m, ab, f) == 1);
  CHECK(pairing(m, FreeVector{}, d0) == 0);
}

TEST_CASE("tree edge-flow norm frozen values") {
  const Metric p = fixtures::path3();
  Tree tp = Tree::realize(p);
  FreeVector d2;
  d2.set(p.index_of("2"), Rat(1));
  auto emb = godard_embed(p, tp, d2);
  REQUIRE(emb.size() == 2);
  CHECK(rat_abs(emb[0]) == 1);
  CHECK(rat_abs(emb[1]) == 1);
  CHECK(free_norm_tree(p, tp, d2) == 2);

  const Metric m = fixtures::m3();
  Tree tm = Tree::realize(m);
  FreeVector ab = molecule(m, m.index_of("a"), m.index_of("b"));
  CHECK(free_norm_tree(m, tm, ab) == 1);
  FreeVector da;
  da.set(m.index_of("a"), Rat(1));
  auto em = godard_embed(m, tm, da);
  REQUIRE(em.size() == 3);  // 3 edges although dim F(M) = 2
  Rat l1 = 0;
  for (const Rat& c : em) l1 += rat_abs(c);
  CHECK(l1 == 1);

  const Metric u = fixtures::u3();
  Tree tu = Tree::realize(u);
  FreeVector ua;
  ua.set(u.index_of("a"), Rat(1));
  CHECK(free_norm_tree(u, tu, ua) == 2);
}

TEST_CASE("star: Dirac at a leaf uses a single coordinate") {
  const Metric m = fixtures::star4();
  Tree t = Tree::realize(m);
  FreeVector dx;
  dx.set(m.index_of("x"), Rat(1));
  auto emb = godard_embed(m, t, dx);
  int nonzero = 0;
  for (const Rat& c : emb)
    if (c != 0) {
      ++nonzero;
      CHECK(rat_abs(c) == 1);  // leg length 1
    }
  CHECK(nonzero == 1);
}

TEST_CASE("free_norm matches brute force and tree norm on random instances") {
  Rng rng(2024);
  for (int it = 0; it < 25; ++it) {
    Metric m = gen_instance("random-tree-metric", 4 + it % 3, 500 + it);
    Tree t = Tree::realize(m);
    for (int k = 0; k < 6; ++k) {
      FreeVector a = fixtures::random_vector(m, rng);
      Rat lp = free_norm(m, a);
      CHECK(lp == brute_force_norm(m, a));
      CHECK(lp == free_norm_tree(m, t, a));
      check_certificates(m, a);
    }
  }
}

TEST_CASE("free_norm is a norm: homogeneity and triangle inequality") {
  Rng rng(77);
  for (int it = 0; it < 15; ++it) {
    Metric m = gen_instance("random-ultrametric", 4 + it % 4, 300 + it);
    FreeVector a = fixtures::random_vector(m, rng);
    FreeVector b = fixtures::random_vector(m, rng);
    Rat s(rng.range(-5, 5), 2);
    s.canonicalize();
    FreeVector sa = a;
    sa *= s;
    CHECK(free_norm(m, sa) == rat_abs(s) * free_norm(m, a));
    CHECK(free_norm(m, a + b) <= free_norm(m, a) + free_norm(m, b));
    CHECK((free_norm(m, a) == 0) == a.is_zero());
  }
}

TEST_CASE("Dirac norms equal distances to base") {
  for (int it = 0; it < 10; ++it) {
    Metric m = gen_instance("perturbed-non-hyperbolic", 4 + it % 3, 60 + it);
    for (int x = 0; x < m.size(); ++x) {
      FreeVector dx;
      if (x != m.base()) dx.set(x, Rat(1));
      CHECK(free_norm(m, dx) == m.d(m.base(), x));
    }
  }
}

TEST_CASE("duality: free_norm equals the max pairing over the dual ball") {
  // For molecules the optimal dual is known: norm of a molecule is <= 1 and
  // its pairing with any 1-Lipschitz f is <= 1.
  Rng rng(99);
  for (int it = 0; it < 10; ++it) {
    Metric m = gen_instance("random-tree-metric", 5, 800 + it);
    for (int x = 0; x < m.size(); ++x)
      for (int y = 0; y < m.size(); ++y) {
        if (x == y) continue;
        FreeVector mol = molecule(m, x, y);
        CHECK(free_norm(m, mol) == 1);
      }
  }
}

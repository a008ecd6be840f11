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
#include "freetree/extremal.hpp"
#include "freetree/generators.hpp"

using namespace freetree;

TEST_CASE("molecule extremality: frozen cases") {
  const Metric p = fixtures::path3();
  Tree tp = Tree::realize(p);
  CHECK(!is_extreme_molecule_segment(p, tp, p.index_of("0"), p.index_of("2")));
  CHECK(!is_extreme_molecule_lp(p, p.index_of("0"), p.index_of("2")));
  CHECK(is_extreme_molecule_segment(p, tp, p.index_of("0"), p.index_of("1")));

  const Metric m = fixtures::m3();
  Tree tm = Tree::realize(m);
  for (int x = 0; x < 3; ++x)
    for (int y = x + 1; y < 3; ++y) {
      CHECK(is_extreme_molecule_segment(m, tm, x, y));
      CHECK(is_extreme_molecule_lp(m, x, y));
    }

  const Metric s = fixtures::star4();
  Tree ts = Tree::realize(s);
  CHECK(!is_extreme_molecule_segment(s, ts, s.index_of("x"), s.index_of("y")));
  CHECK(!is_extreme_molecule_lp(s, s.index_of("x"), s.index_of("y")));
}

TEST_CASE("molecule extremality: LP test agrees with segment criterion") {
  for (int it = 0; it < 12; ++it) {
    Metric m = it % 2 == 0
                   ? gen_instance("random-tree-metric", 4 + it % 4, 40 + it)
                   : gen_instance("random-ultrametric", 4 + it % 4, 40 + it);
    Tree t = Tree::realize(m);
    for (int x = 0; x < m.size(); ++x)
      for (int y = x + 1; y < m.size(); ++y)
        CHECK(is_extreme_molecule_segment(m, t, x, y) ==
              is_extreme_molecule_lp(m, x, y));
  }
}

TEST_CASE("Lipschitz extremality: frozen cases") {
  const Metric m = fixtures::m3();
  LipFunction d0(3);
  for (int i = 0; i < 3; ++i) d0.values[i] = m.d(m.base(), i);
  CHECK(is_extreme_lip(m, d0));
  CHECK(is_extreme_lip_perturbation(m, d0));
  CHECK(!is_extreme_lip(m, LipFunction(3)));
  CHECK(!is_extreme_lip_perturbation(m, LipFunction(3)));
  LipFunction f(3);
  f.values[m.index_of("a")] = 1;
  CHECK(is_extreme_lip(m, f));
  CHECK(is_extreme_lip_perturbation(m, f));
  LipFunction big(3);
  big.values[1] = 5;
  CHECK_THROWS_AS(is_extreme_lip(m, big), NormExceedsOne);
}

TEST_CASE("Lipschitz extremality: tight graph agrees with perturbation LP") {
  Rng rng(314);
  int tested = 0;
  for (int it = 0; tested < 80; ++it) {
    Metric m = gen_instance(it % 2 == 0 ? "random-tree-metric"
                                        : "perturbed-non-hyperbolic",
                            4 + it % 3, 1000 + it);
    for (int k = 0; k < 8; ++k) {
      LipFunction f(m.size());
      for (int i = 0; i < m.size(); ++i) {
        if (i == m.base()) continue;
        Rat v(rng.range(-8, 8), 1 + rng.below(3));
        v.canonicalize();
        f.values[i] = v;
      }
      Rat nrm = lip_norm(m, f);
      if (nrm == 0) continue;
      // Scale to norm exactly 1 half the time, strictly inside otherwise.
      Rat s = k % 2 == 0 ? Rat(1 / nrm) : Rat(Rat(1, 2) / nrm);
      for (auto& v : f.values) v *= s;
      CHECK(is_extreme_lip(m, f) == is_extreme_lip_perturbation(m, f));
      ++tested;
    }
  }
}

TEST_CASE("extensions: frozen cases") {
  const Metric m = fixtures::m3();
  std::vector<int> A = {m.base(), m.index_of("a")};
  std::map<int, Rat> f = {{m.base(), Rat(0)}, {m.index_of("a"), Rat(1)}};
  LipFunction fs = extend_sup(m, A, f);
  LipFunction fi = extend_inf(m, A, f);
  CHECK(fs.values[m.index_of("b")] == 0);
  CHECK(fi.values[m.index_of("b")] == 1);
  // Both restrict to f on A and are 1-Lipschitz when f is.
  CHECK(fs.values[m.index_of("a")] == 1);
  CHECK(fi.values[m.index_of("a")] == 1);
  CHECK(lip_norm(m, fs) <= 1);
  CHECK(lip_norm(m, fi) <= 1);

  const Metric u = fixtures::u3();
  std::vector<int> Au = {u.base(), u.index_of("a")};
  std::map<int, Rat> fu = {{u.base(), Rat(0)}, {u.index_of("a"), Rat(2)}};
  CHECK(extend_inf(u, Au, fu).values[u.index_of("b")] == 2);

  CHECK_THROWS_AS(extend_sup(m, {m.index_of("a")}, {{m.index_of("a"), Rat(0)}}),
                  NotOnePointed);
}

TEST_CASE("extensions sandwich every 1-Lipschitz extension") {
  Rng rng(2718);
  for (int it = 0; it < 20; ++it) {
    Metric m = gen_instance("random-tree-metric", 5 + it % 4, 650 + it);
    // Restrict a random 1-Lipschitz function to a random subset containing
    // the base, then extend back.
    LipFunction g(m.size());
    for (int i = 0; i < m.size(); ++i)
      if (i != m.base()) {
        Rat v(rng.range(-4, 4), 2);
        v.canonicalize();
        g.values[i] = v;
      }
    Rat nrm = lip_norm(m, g);
    if (nrm == 0) continue;
    for (auto& v : g.values) v /= nrm;
    std::vector<int> A = {m.base()};
    std::map<int, Rat> f = {{m.base(), Rat(0)}};
    for (int i = 0; i < m.size(); ++i)
      if (i != m.base() && rng.below(2) == 0) {
        A.push_back(i);
        f[i] = g.values[i];
      }
    LipFunction fs = extend_sup(m, A, f);
    LipFunction fi = extend_inf(m, A, f);
    CHECK(lip_norm(m, fs) <= 1);
    CHECK(lip_norm(m, fi) <= 1);
    for (int i = 0; i < m.size(); ++i) {
      CHECK(fs.values[i] <= g.values[i]);
      CHECK(g.values[i] <= fi.values[i]);
    }
    for (int a : A) {
      CHECK(fs.values[a] == f[a]);
      CHECK(fi.values[a] == f[a]);
    }
  }
}

TEST_CASE("primal witness: frozen cases") {
  const Metric m = fixtures::m3();
  Tree t = Tree::realize(m);
  REQUIRE(t.missing_branch_points().size() == 1);
  PrimalWitness w = primal_witness(m, t, t.missing_branch_points()[0]);
  CHECK(w.dist == 1);
  CHECK(free_norm(m, w.mu - w.nu) == w.dist);
  CHECK(is_extreme_molecule_lp(m, w.x, w.y));

  const Metric u = fixtures::u3();
  Tree tu = Tree::realize(u);
  PrimalWitness wu = primal_witness(u, tu, tu.missing_branch_points()[0]);
  CHECK(wu.dist <= 1);

  const Metric s = fixtures::star4();
  Tree ts = Tree::realize(s);
  CHECK_THROWS_AS(primal_witness(s, ts, ts.branching_points()[0]),
                  NoMissingBranchPoint);
}

TEST_CASE("dual witness: frozen cases") {
  const Metric m = fixtures::m3();
  Tree t = Tree::realize(m);
  DualWitness w = dual_witness(m, t, t.missing_branch_points()[0]);
  CHECK(w.dist == 1);
  CHECK(w.dist < 2);
  CHECK(is_extreme_lip(m, w.f));
  CHECK(is_extreme_lip(m, w.g));

  const Metric u = fixtures::u3();
  Tree tu = Tree::realize(u);
  DualWitness wu = dual_witness(u, tu, tu.missing_branch_points()[0]);
  CHECK(wu.dist == 1);
  CHECK(wu.z == u.index_of("a"));
  // g(a) = 3/2 - 1/2 + 0 = 1 while f(a) = d(0,a) = 2.
  CHECK(wu.g.values[wu.z] == 1);
  CHECK(wu.f.values[wu.z] == 2);

  const Metric s = fixtures::star4();
  Tree ts = Tree::realize(s);
  CHECK_THROWS_AS(dual_witness(s, ts, ts.branching_points()[0]),
                  NoMissingBranchPoint);
}

TEST_CASE("verdict: frozen cases") {
  Certificate cp = ell1_verdict(fixtures::path3());
  CHECK(cp.tag == Certificate::Tag::IsometricToL1);
  REQUIRE(cp.tree.has_value());
  CHECK(cp.tree->edges().size() == 2);

  Certificate cm = ell1_verdict(fixtures::m3());
  CHECK(cm.tag == Certificate::Tag::NotIsometric);
  REQUIRE(cm.primal.has_value());
  REQUIRE(cm.dual.has_value());
  CHECK(cm.primal->dist == 1);
  CHECK(cm.dual->dist == 1);

  Certificate cc = ell1_verdict(fixtures::c4());
  CHECK(cc.tag == Certificate::Tag::NotZeroHyperbolic);
  CHECK(cc.violation.has_value());

  Certificate cs = ell1_verdict(fixtures::star4());
  CHECK(cs.tag == Certificate::Tag::IsometricToL1);
}

TEST_CASE("verdict tag is invariant under base change") {
  for (int it = 0; it < 10; ++it) {
    Metric m = gen_instance("random-tree-metric", 5 + it % 4, 90 + it);
    Certificate c0 = ell1_verdict(m);
    for (int b = 1; b < m.size(); ++b) {
      Metric mb = Metric::validate(m.labels(), b, m.matrix());
      CHECK(ell1_verdict(mb).tag == c0.tag);
    }
  }
}

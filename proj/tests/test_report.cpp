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
#include "freetree/generators.hpp"
#include "freetree/json_io.hpp"
#include "freetree/report.hpp"

using namespace freetree;

TEST_CASE("space JSON round-trips") {
  Metric m = gen_instance("random-tree-metric", 6, 12);
  Json j = space_to_json(m);
  Metric back = space_from_json(j);
  CHECK(back.labels() == m.labels());
  CHECK(back.base() == m.base());
  CHECK(back.matrix() == m.matrix());
}

TEST_CASE("space CSV parses with the first label as base") {
  Metric m = space_from_csv("0,a,b\n0,1,1\n1,0,1\n1,1,0\n");
  CHECK(m.size() == 3);
  CHECK(m.base() == 0);
  CHECK(m.d(0, 1) == 1);
  CHECK_THROWS_AS(space_from_csv("a,b\n0,1\n"), MetricError);
  CHECK_THROWS_AS(space_from_csv(""), ParseError);
}

TEST_CASE("tree input induces the original path metric") {
  Metric m = gen_instance("random-tree-metric", 7, 91);
  Tree t = Tree::realize(m);
  Json j = tree_to_json(m, t);
  j["base"] = m.label(m.base());
  Metric back = space_from_tree_json(j);
  CHECK(back.size() == m.size());
  CHECK(back.label(back.base()) == m.label(m.base()));
  for (int i = 0; i < back.size(); ++i)
    for (int k = 0; k < back.size(); ++k)
      CHECK(back.d(i, k) ==
            m.d(m.index_of(back.label(i)), m.index_of(back.label(k))));
  CHECK_THROWS_AS(space_from_tree_json(Json{{"nodes", Json::array()}}),
                  ParseError);
}

TEST_CASE("rationals serialize as p/q strings") {
  CHECK(rat_to_json(Rat(8, 7)) == Json("8/7"));
  CHECK(rat_to_json(Rat(-1, 2)) == Json("-1/2"));
  CHECK(rat_to_json(Rat(3)) == Json("3"));
}

TEST_CASE("vector and function JSON round-trip") {
  const Metric m = fixtures::m3();
  FreeVector a;
  a.set(m.index_of("a"), Rat(3, 2));
  a.set(m.index_of("b"), Rat(-1));
  FreeVector a2 = freevector_from_json(m, freevector_to_json(m, a));
  CHECK(a2.coeff == a.coeff);

  LipFunction f(3);
  f.values[m.index_of("a")] = Rat(1, 2);
  LipFunction f2 = lipfunction_from_json(m, lipfunction_to_json(m, f));
  CHECK(f2 == f);
  // Nonzero base coefficient is rejected.
  Json bad = {{"values", {{"0", "1"}}}};
  CHECK_THROWS(lipfunction_from_json(m, bad));
}

TEST_CASE("digest is invariant under label permutation") {
  Metric m = gen_instance("random-tree-metric", 6, 77);
  std::vector<int> perm = {3, 0, 5, 1, 4, 2};
  std::vector<std::string> labels(6);
  std::vector<std::vector<Rat>> d(6, std::vector<Rat>(6));
  int nb = 0;
  for (int i = 0; i < 6; ++i) {
    labels[i] = m.label(perm[i]);
    if (perm[i] == m.base()) nb = i;
    for (int j = 0; j < 6; ++j) d[i][j] = m.d(perm[i], perm[j]);
  }
  Metric p = Metric::validate(labels, nb, d);
  CHECK(space_digest(p) == space_digest(m));
  // A genuinely different space digests differently.
  Metric other = gen_instance("random-tree-metric", 6, 78);
  CHECK(space_digest(other) != space_digest(m));
}

TEST_CASE("payloads are deterministic") {
  Metric m = gen_instance("random-ultrametric", 5, 1);
  CHECK(payload_check(m).dump() == payload_check(m).dump());
  CHECK(payload_verdict(m).dump() == payload_verdict(m).dump());
  CHECK(payload_bm(m).dump() == payload_bm(m).dump());
  CHECK(gen_instance_json("random-ultrametric", 5, 1).dump() ==
        gen_instance_json("random-ultrametric", 5, 1).dump());
}

TEST_CASE("verify passes on freshly generated reports of every command") {
  for (int it = 0; it < 6; ++it) {
    Metric m = it % 2 == 0
                   ? gen_instance("random-tree-metric", 4 + it, 400 + it)
                   : gen_instance("random-ultrametric", 4 + it, 400 + it);
    CHECK(verify_report(make_report("check", m, payload_check(m))).empty());
    CHECK(verify_report(make_report("realize", m, payload_realize(m))).empty());
    CHECK(verify_report(make_report("verdict", m, payload_verdict(m))).empty());
    CHECK(verify_report(make_report("bm", m, payload_bm(m))).empty());
    Rng rng(it);
    FreeVector a = fixtures::random_vector(m, rng);
    CHECK(verify_report(
              make_report("norm", m, payload_norm(m, a, std::nullopt)))
              .empty());
    LipFunction f(m.size());
    f.values[(m.base() + 1) % m.size()] = Rat(1, 3);
    CHECK(verify_report(
              make_report("norm", m, payload_norm(m, std::nullopt, f)))
              .empty());
  }
  Metric c = fixtures::c4();
  CHECK(verify_report(make_report("verdict", c, payload_verdict(c))).empty());
  CHECK(verify_report(make_report("bm", c, payload_bm(c))).empty());
  Metric p = fixtures::path3();
  CHECK(verify_report(make_report("bm", p, payload_bm(p))).empty());
}

TEST_CASE("verify rejects tampered reports") {
  Metric m = fixtures::m3();
  Json r = make_report("bm", m, payload_bm(m));
  Json bad = r;
  bad["payload"]["bm"]["formula_bound"] = "9/7";
  CHECK(!verify_report(bad).empty());

  Json bad2 = make_report("verdict", m, payload_verdict(m));
  bad2["payload"]["certificate"]["primal"]["dist"] = "2/3";
  CHECK(!verify_report(bad2).empty());

  Json bad3 = r;
  bad3["input"]["dist"][0][1] = "7/2";  // digest no longer matches
  CHECK(!verify_report(bad3).empty());
}

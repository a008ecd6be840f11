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

#include "freetree/report.hpp"

#include <algorithm>
#include <ctime>

#include "freetree/bm.hpp"
#include "freetree/extremal.hpp"

namespace freetree {

std::string space_digest(const Metric& m) {
  auto order = m.sorted_order();
  std::string canon;
  for (int i : order) canon += m.label(i) + "|";
  canon += "@" + m.label(m.base()) + "@";
  for (int i : order)
    for (int j : order) canon += to_fraction(m.d(i, j)) + ",";
  uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : canon) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Json labels_of(const Metric& m, const std::vector<int>& pts) {
  Json out = Json::array();
  for (int p : pts) out.push_back(m.label(p));
  return out;
}

template <size_t N>
Json labels_of(const Metric& m, const std::array<int, N>& pts) {
  return labels_of(m, std::vector<int>(pts.begin(), pts.end()));
}

}  // namespace

Json payload_check(const Metric& m) {
  Json j;
  j["valid"] = true;
  j["size"] = m.size();
  if (auto q = four_point_violation(m))
    j["four_point"] = {{"pass", false}, {"witness", labels_of(m, *q)}};
  else
    j["four_point"] = {{"pass", true}};
  if (auto tr = ultrametric_violation(m))
    j["ultrametric"] = {{"pass", false}, {"witness", labels_of(m, *tr)}};
  else
    j["ultrametric"] = {{"pass", true}};
  Rat dm = diam(m);
  j["diam"] = to_fraction(dm);
  j["diam_approx"] = to_decimal(dm);
  try {
    Rat s = sep(m);
    j["sep"] = to_fraction(s);
    j["sep_approx"] = to_decimal(s);
  } catch (const TooFewPoints&) {
    j["sep"] = nullptr;
    j["sep_error"] = "TooFewPoints";
  }
  return j;
}

Json payload_realize(const Metric& m) {
  Json j;
  try {
    Tree t = Tree::realize(m);
    j["tree"] = tree_to_json(m, t);
    j["branching_points"] = t.branching_points();
    j["missing_branch_points"] = t.missing_branch_points();
  } catch (const NotZeroHyperbolic& e) {
    j["error"] = "NotZeroHyperbolic";
    j["quadruple"] = labels_of(m, e.quad);
  }
  return j;
}

Json payload_norm(const Metric& m, const std::optional<FreeVector>& vec,
                  const std::optional<LipFunction>& fn) {
  Json j;
  if (vec) {
    auto res = free_norm_certified(m, *vec);
    j["kind"] = "free";
    j["vector"] = freevector_to_json(m, *vec);
    j["norm"] = to_fraction(res.cost);
    j["norm_approx"] = to_decimal(res.cost);
    Json plan = Json::array();
    for (const auto& e : res.plan)
      plan.push_back({{"from", m.label(e.from)},
                      {"to", m.label(e.to)},
                      {"amount", to_fraction(e.amount)}});
    j["plan"] = plan;
    j["dual"] = lipfunction_to_json(m, res.dual);
  } else {
    Rat norm = lip_norm(m, *fn);
    j["kind"] = "lip";
    j["function"] = lipfunction_to_json(m, *fn);
    j["norm"] = to_fraction(norm);
    j["norm_approx"] = to_decimal(norm);
  }
  return j;
}

Json payload_verdict(const Metric& m) {
  return Json{{"certificate", certificate_to_json(m, ell1_verdict(m))}};
}

Json payload_bm(const Metric& m) {
  Json j;
  try {
    Tree t = Tree::realize(m);
    PeakingFamily fam = peaking_family(m, t);
    BmCertificate cert = bm_lower_certified(m, t);
    j["bm"] = bm_certificate_to_json(m, fam, cert);
  } catch (const NotZeroHyperbolic& e) {
    j["error"] = "NotZeroHyperbolic";
    j["quadruple"] = labels_of(m, e.quad);
  } catch (const SeparationZero&) {
    j["error"] = "SeparationZero";
  } catch (const TooFewPoints&) {
    j["error"] = "TooFewPoints";
  }
  return j;
}

Json make_report(const std::string& command, const Metric& m, Json payload) {
  Json j;
  j["tool"] = "freetree";
  j["version"] = kToolVersion;
  j["command"] = command;
  j["digest"] = space_digest(m);
  char ts[32];
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::strftime(ts, sizeof ts, "%Y-%m-%dT%H:%M:%SZ", &tm);
  j["timestamp"] = ts;
  j["input"] = space_to_json(m);
  j["payload"] = std::move(payload);
  return j;
}

namespace {

void check(std::vector<std::string>& problems, bool ok, const std::string& what) {
  if (!ok) problems.push_back(what);
}

void verify_verdict_claims(const Metric& m, const Json& payload,
                           std::vector<std::string>& problems) {
  const Json& cert = payload.at("certificate");
  const std::string tag = cert.at("tag").get<std::string>();
  if (tag == "NotZeroHyperbolic") {
    std::vector<int> q;
    for (const auto& l : cert.at("quadruple"))
      q.push_back(m.index_of(l.get<std::string>()));
    check(problems, q.size() == 4 && q[0] >= 0 && q[1] >= 0 && q[2] >= 0 &&
                        q[3] >= 0,
          "quadruple labels unknown");
    if (!problems.empty()) return;
    Rat lhs = m.d(q[0], q[1]) + m.d(q[2], q[3]);
    Rat rhs = std::max(Rat(m.d(q[0], q[2]) + m.d(q[1], q[3])),
                       Rat(m.d(q[0], q[3]) + m.d(q[1], q[2])));
    check(problems, lhs > rhs, "claimed quadruple does not violate 4-point");
    return;
  }
  Tree t = Tree::realize(m);
  // The exported tree must reproduce the metric exactly.
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j)
      check(problems,
            t.node_distance(t.node_of_point(i), t.node_of_point(j)) == m.d(i, j),
            "tree does not reproduce d(" + m.label(i) + "," + m.label(j) + ")");
  if (tag == "IsometricToL1") {
    check(problems, t.missing_branch_points().empty(),
          "tree has Steiner branching nodes");
    check(problems,
          cert.at("dimension").get<int>() == m.size() - 1 &&
              static_cast<int>(t.edges().size()) == m.size() - 1,
          "coordinate count != |M|-1");
    // The coordinate map must be an l1 isometry on a spanning set.
    for (int x = 0; x < m.size(); ++x) {
      if (x == m.base()) continue;
      FreeVector dirac;
      dirac.set(x, Rat(1));
      check(problems, free_norm_tree(m, t, dirac) == free_norm(m, dirac),
            "coordinate map not isometric on delta_" + m.label(x));
    }
    return;
  }
  if (tag != "NotIsometric") {
    problems.push_back("unknown verdict tag '" + tag + "'");
    return;
  }
  check(problems, !t.missing_branch_points().empty(),
        "NotIsometric claimed but all branching points are in M");
  const Json& pw = cert.at("primal");
  FreeVector mu = freevector_from_json(m, pw.at("mu"));
  FreeVector nu = freevector_from_json(m, pw.at("nu"));
  int x = m.index_of(pw.at("x").get<std::string>());
  int y = m.index_of(pw.at("y").get<std::string>());
  int z = m.index_of(pw.at("z").get<std::string>());
  check(problems, x >= 0 && y >= 0 && z >= 0, "primal witness labels unknown");
  Rat pdist = parse_rational(pw.at("dist").get<std::string>());
  check(problems, free_norm(m, mu - nu) == pdist,
        "primal witness distance does not re-derive");
  check(problems, pdist <= 1, "primal witness distance exceeds 1");
  if (x >= 0 && y >= 0 && z >= 0) {
    check(problems, mu.coeff == molecule(m, x, y).coeff,
          "mu is not the claimed molecule");
    check(problems, nu.coeff == molecule(m, z, y).coeff,
          "nu is not the claimed molecule");
    check(problems,
          is_extreme_molecule_segment(m, t, x, y) &&
              is_extreme_molecule_lp(m, x, y),
          "mu not extreme");
    check(problems,
          is_extreme_molecule_segment(m, t, z, y) &&
              is_extreme_molecule_lp(m, z, y),
          "nu not extreme");
  }
  const Json& dw = cert.at("dual");
  LipFunction f = lipfunction_from_json(m, dw.at("f"));
  LipFunction g = lipfunction_from_json(m, dw.at("g"));
  Rat ddist = parse_rational(dw.at("dist").get<std::string>());
  LipFunction diff(m.size());
  for (int i = 0; i < m.size(); ++i) diff.values[i] = f(i) - g(i);
  check(problems, lip_norm(m, diff) == ddist,
        "dual witness distance does not re-derive");
  check(problems, ddist < 2, "dual witness distance not strictly below 2");
  check(problems, !(f == g), "dual witness functions coincide");
  check(problems, is_extreme_lip(m, f) && is_extreme_lip_perturbation(m, f),
        "f not extreme");
  check(problems, is_extreme_lip(m, g) && is_extreme_lip_perturbation(m, g),
        "g not extreme");
}

void verify_norm_claims(const Metric& m, const Json& payload,
                        std::vector<std::string>& problems) {
  if (payload.at("kind") == "lip") {
    LipFunction f = lipfunction_from_json(m, payload.at("function"));
    check(problems,
          to_fraction(lip_norm(m, f)) == payload.at("norm").get<std::string>(),
          "lip norm does not re-derive");
    return;
  }
  FreeVector a = freevector_from_json(m, payload.at("vector"));
  Rat claimed = parse_rational(payload.at("norm").get<std::string>());
  // Plan: correct marginals, cost equal to the claimed norm.
  std::vector<Rat> net(m.size(), Rat(0));
  Rat plan_cost = 0;
  for (const auto& e : payload.at("plan")) {
    int from = m.index_of(e.at("from").get<std::string>());
    int to = m.index_of(e.at("to").get<std::string>());
    Rat amt = parse_rational(e.at("amount").get<std::string>());
    check(problems, from >= 0 && to >= 0 && amt > 0, "malformed plan entry");
    if (from < 0 || to < 0) return;
    net[from] += amt;
    net[to] -= amt;
    plan_cost += amt * m.d(from, to);
  }
  Rat total = 0;
  for (const auto& [p, v] : a.coeff) total += v;
  for (int i = 0; i < m.size(); ++i) {
    Rat want = i == m.base() ? Rat(-total) : a.get(i);
    check(problems, net[i] == want,
          "plan marginal mismatch at " + m.label(i));
  }
  check(problems, plan_cost == claimed, "plan cost != claimed norm");
  // Dual: 1-Lipschitz and attaining the claimed value.
  LipFunction dual = lipfunction_from_json(m, payload.at("dual"));
  check(problems, lip_norm(m, dual) <= 1, "dual certificate not 1-Lipschitz");
  check(problems, pairing(m, a, dual) == claimed,
        "dual pairing != claimed norm");
  check(problems, free_norm(m, a) == claimed, "norm does not re-derive");
}

void verify_bm_claims(const Metric& m, const Json& payload,
                      std::vector<std::string>& problems) {
  if (payload.contains("error")) {
    const std::string err = payload.at("error").get<std::string>();
    if (err == "SeparationZero")
      check(problems, m.size() >= 3 && sep(m) == 0, "sep is not zero");
    else if (err == "TooFewPoints")
      check(problems, m.size() < 3, "space has enough points");
    else if (err == "NotZeroHyperbolic")
      check(problems, four_point_violation(m).has_value(),
            "space is 0-hyperbolic");
    else
      problems.push_back("unknown bm error '" + err + "'");
    return;
  }
  const Json& bm = payload.at("bm");
  Rat formula = parse_rational(bm.at("formula_bound").get<std::string>());
  Rat certified = parse_rational(bm.at("certified_bound").get<std::string>());
  Rat eps = parse_rational(bm.at("epsilon").get<std::string>());
  Rat worst = parse_rational(bm.at("worst_midpoint_norm").get<std::string>());
  Rat s = sep(m), dm = diam(m);
  check(problems, s > 0, "sep not positive");
  check(problems, formula == Rat(1) / Rat(1 - s / (4 * dm)),
        "formula bound does not re-derive");
  check(problems, eps == 1 - worst && certified == Rat(1) / worst,
        "certified bound inconsistent with epsilon");
  check(problems, certified >= formula && formula > 1,
        "bound ordering violated");
  // Re-derive every claimed midpoint norm from the named peaking functions.
  Tree t = Tree::realize(m);
  auto fn_of = [&](const Json& pair_labels) {
    int i = m.index_of(pair_labels.at(0).get<std::string>());
    int j = m.index_of(pair_labels.at(1).get<std::string>());
    LipFunction f(m.size());
    for (int zz = 0; zz < m.size(); ++zz)
      f.values[zz] = Rat((m.d(i, j) + m.d(j, zz) - m.d(i, zz)) / 2);
    Rat at_base = f(m.base());
    for (auto& v : f.values) v -= at_base;
    return f;
  };
  std::vector<LipFunction> sel;
  for (const auto& pj : bm.at("subset")) {
    LipFunction f = fn_of(pj);
    check(problems, lip_norm(m, f) == 1, "peaking function not norm one");
    sel.push_back(std::move(f));
  }
  check(problems, static_cast<int>(sel.size()) == 2 * (m.size() - 1) + 1,
        "subset size != 2n+1");
  Rat maxmid = 0;
  for (size_t i = 0; i < sel.size(); ++i)
    for (size_t j = i + 1; j < sel.size(); ++j) {
      LipFunction h(m.size());
      for (int zz = 0; zz < m.size(); ++zz)
        h.values[zz] = Rat((sel[i](zz) + sel[j](zz)) / 2);
      Rat mn = lip_norm(m, h);
      if (mn > maxmid) maxmid = mn;
    }
  check(problems, maxmid == worst,
        "worst midpoint norm does not re-derive over the subset");
  return;
}

}  // namespace

namespace {

std::vector<std::string> verify_report_impl(const Json& report) {
  std::vector<std::string> problems;
  Metric m = space_from_json(report.at("input"));
  check(problems, report.at("digest").get<std::string>() == space_digest(m),
        "digest mismatch");
  const std::string cmd = report.at("command").get<std::string>();
  const Json& payload = report.at("payload");

  // Deterministic pipeline: recomputing the payload must reproduce it
  // byte-for-byte.
  Json recomputed;
  if (cmd == "check") {
    recomputed = payload_check(m);
  } else if (cmd == "realize") {
    recomputed = payload_realize(m);
  } else if (cmd == "verdict") {
    recomputed = payload_verdict(m);
  } else if (cmd == "bm") {
    recomputed = payload_bm(m);
  } else if (cmd == "norm") {
    std::optional<FreeVector> vec;
    std::optional<LipFunction> fn;
    if (payload.at("kind") == "free")
      vec = freevector_from_json(m, payload.at("vector"));
    else
      fn = lipfunction_from_json(m, payload.at("function"));
    recomputed = payload_norm(m, vec, fn);
  } else {
    problems.push_back("unknown command '" + cmd + "'");
    return problems;
  }
  check(problems, recomputed == payload, "payload does not reproduce");

  // Independent re-derivation of the numeric claims.
  try {
    if (cmd == "verdict") verify_verdict_claims(m, payload, problems);
    if (cmd == "norm") verify_norm_claims(m, payload, problems);
    if (cmd == "bm") verify_bm_claims(m, payload, problems);
  } catch (const std::exception& e) {
    problems.push_back(std::string("verification error: ") + e.what());
  }
  return problems;
}

}  // namespace

std::vector<std::string> verify_report(const Json& report) {
  // A malformed or tampered report must yield problems, not an exception.
  try {
    return verify_report_impl(report);
  } catch (const std::exception& e) {
    return {std::string("malformed report: ") + e.what()};
  }
}

}  // namespace freetree

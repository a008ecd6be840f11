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

#include "freetree/json_io.hpp"

#include <map>
#include <optional>
#include <sstream>

namespace freetree {

Json rat_to_json(const Rat& r) { return Json(to_fraction(r)); }

Json space_to_json(const Metric& m) {
  Json j;
  j["labels"] = m.labels();
  j["base"] = m.label(m.base());
  Json rows = Json::array();
  for (int i = 0; i < m.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.size(); ++k) row.push_back(to_fraction(m.d(i, k)));
    rows.push_back(row);
  }
  j["dist"] = rows;
  return j;
}

Metric space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.contains("dist"))
    throw ParseError("space JSON needs 'labels' and 'dist'");
  std::vector<std::string> labels;
  for (const auto& l : j.at("labels")) labels.push_back(l.get<std::string>());
  int base = 0;
  if (j.contains("base")) {
    std::string b = j.at("base").get<std::string>();
    base = -1;
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == b) base = static_cast<int>(i);
    if (base < 0) throw ParseError("base label '" + b + "' not in labels");
  }
  std::vector<std::vector<Rat>> dist;
  for (const auto& row : j.at("dist")) {
    std::vector<Rat> r;
    for (const auto& cell : row) {
      try {
        r.push_back(cell.is_string() ? parse_rational(cell.get<std::string>())
                                     : parse_rational(cell.dump()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    dist.push_back(std::move(r));
  }
  return Metric::validate(std::move(labels), base, std::move(dist));
}

Metric space_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  auto split = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(cur);
        cur.clear();
      } else if (c != '\r' && c != ' ') {
        cur += c;
      }
    }
    out.push_back(cur);
    return out;
  };
  if (!std::getline(in, line)) throw ParseError("empty CSV");
  std::vector<std::string> labels = split(line);
  std::vector<std::vector<Rat>> dist;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    auto cells = split(line);
    if (cells.size() != labels.size())
      throw ParseError("CSV line " + std::to_string(lineno) + ": expected " +
                       std::to_string(labels.size()) + " cells");
    std::vector<Rat> row;
    for (const auto& c : cells) {
      try {
        row.push_back(parse_rational(c));
      } catch (const std::invalid_argument& e) {
        throw ParseError("CSV line " + std::to_string(lineno) + ": " +
                         e.what());
      }
    }
    dist.push_back(std::move(row));
  }
  return Metric::validate(std::move(labels), 0, std::move(dist));
}

Metric space_from_tree_json(const Json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("edges"))
    throw ParseError("tree JSON needs 'nodes' and 'edges'");
  // Node ids may be sparse; remap to dense indices.
  std::map<int, int> idx;
  std::vector<std::string> node_label;
  for (const auto& n : j.at("nodes")) {
    int id = n.at("id").get<int>();
    if (idx.count(id)) throw ParseError("duplicate tree node id");
    idx[id] = static_cast<int>(node_label.size());
    node_label.push_back(n.contains("label") ? n.at("label").get<std::string>()
                                             : std::string());
  }
  int nn = static_cast<int>(node_label.size());
  std::vector<std::vector<std::pair<int, Rat>>> adj(nn);
  for (const auto& e : j.at("edges")) {
    auto iu = idx.find(e.at("u").get<int>());
    auto iv = idx.find(e.at("v").get<int>());
    if (iu == idx.end() || iv == idx.end())
      throw ParseError("tree edge references an unknown node id");
    Rat len;
    try {
      len = parse_rational(e.at("len").is_string()
                               ? e.at("len").get<std::string>()
                               : e.at("len").dump());
    } catch (const std::invalid_argument& ex) {
      throw ParseError(ex.what());
    }
    if (len <= 0) throw ParseError("tree edge length must be positive");
    adj[iu->second].push_back({iv->second, len});
    adj[iv->second].push_back({iu->second, len});
  }
  if (static_cast<int>(j.at("edges").size()) != nn - 1)
    throw ParseError("tree must have exactly (node count - 1) edges");
  // Depth-first accumulation from node 0 gives all distances at once per
  // source; connectivity + edge count certify the tree property.
  auto dists_from = [&](int src) {
    std::vector<std::optional<Rat>> d(nn);
    std::vector<int> stack = {src};
    d[src] = Rat(0);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const auto& [v, len] : adj[u])
        if (!d[v]) {
          d[v] = Rat(*d[u] + len);
          stack.push_back(v);
        }
    }
    return d;
  };
  std::vector<int> pts;
  for (int v = 0; v < nn; ++v)
    if (!node_label[v].empty()) pts.push_back(v);
  if (pts.empty()) throw ParseError("tree has no labeled nodes");
  std::vector<std::string> labels;
  for (int v : pts) labels.push_back(node_label[v]);
  int np = static_cast<int>(pts.size());
  std::vector<std::vector<Rat>> dist(np, std::vector<Rat>(np, Rat(0)));
  for (int i = 0; i < np; ++i) {
    auto d = dists_from(pts[i]);
    for (int k = 0; k < np; ++k) {
      if (!d[pts[k]]) throw ParseError("tree is not connected");
      dist[i][k] = *d[pts[k]];
    }
  }
  int base = 0;
  if (j.contains("base")) {
    std::string b = j.at("base").get<std::string>();
    base = -1;
    for (int i = 0; i < np; ++i)
      if (labels[i] == b) base = i;
    if (base < 0) throw ParseError("base label '" + b + "' not in tree");
  }
  return Metric::validate(std::move(labels), base, std::move(dist));
}

Json tree_to_json(const Metric& m, const Tree& t) {
  Json nodes = Json::array();
  for (int v = 0; v < t.node_count(); ++v) {
    Json n;
    n["id"] = v;
    if (t.nodes()[v].point >= 0) {
      n["kind"] = "original";
      n["label"] = m.label(t.nodes()[v].point);
    } else {
      n["kind"] = "steiner";
    }
    nodes.push_back(n);
  }
  Json edges = Json::array();
  for (const auto& e : t.edges())
    edges.push_back({{"u", e.u}, {"v", e.v}, {"len", to_fraction(e.len)}});
  return Json{{"nodes", nodes}, {"edges", edges}};
}

Json freevector_to_json(const Metric& m, const FreeVector& a) {
  Json coeffs = Json::object();
  for (const auto& [p, v] : a.coeff) coeffs[m.label(p)] = to_fraction(v);
  return Json{{"coeffs", coeffs}};
}

FreeVector freevector_from_json(const Metric& m, const Json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw ParseError("free vector JSON needs 'coeffs'");
  FreeVector a;
  for (const auto& [label, v] : j.at("coeffs").items()) {
    int p = m.index_of(label);
    if (p < 0) throw ParseError("unknown label '" + label + "'");
    Rat r;
    try {
      r = parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
    if (p == m.base()) {
      if (r != 0)
        throw ParseError("base coefficient is implicit and must be 0");
      continue;
    }
    a.set(p, r);
  }
  return a;
}

Json lipfunction_to_json(const Metric& m, const LipFunction& f) {
  Json values = Json::object();
  for (int i = 0; i < m.size(); ++i) values[m.label(i)] = to_fraction(f(i));
  return Json{{"values", values}};
}

LipFunction lipfunction_from_json(const Metric& m, const Json& j) {
  if (!j.is_object() || !j.contains("values"))
    throw ParseError("Lipschitz function JSON needs 'values'");
  LipFunction f(m.size());
  for (const auto& [label, v] : j.at("values").items()) {
    int p = m.index_of(label);
    if (p < 0) throw ParseError("unknown label '" + label + "'");
    try {
      f.values[p] = parse_rational(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  if (f(m.base()) != 0) throw ParseError("value at the base point must be 0");
  return f;
}

Json certificate_to_json(const Metric& m, const Certificate& c) {
  Json j;
  switch (c.tag) {
    case Certificate::Tag::NotZeroHyperbolic: {
      j["tag"] = "NotZeroHyperbolic";
      Json quad = Json::array();
      for (int p : *c.violation) quad.push_back(m.label(p));
      j["quadruple"] = quad;
      break;
    }
    case Certificate::Tag::IsometricToL1: {
      j["tag"] = "IsometricToL1";
      j["tree"] = tree_to_json(m, *c.tree);
      Json coords = Json::array();
      for (size_t e = 0; e < c.tree->edges().size(); ++e) {
        Json fs = Json::array();
        for (int p : c.tree->far_side_points()[e]) fs.push_back(m.label(p));
        coords.push_back({{"edge", static_cast<int>(e)},
                          {"len", to_fraction(c.tree->edges()[e].len)},
                          {"far_side", fs}});
      }
      j["coordinates"] = coords;
      j["dimension"] = static_cast<int>(c.tree->edges().size());
      break;
    }
    case Certificate::Tag::NotIsometric: {
      j["tag"] = "NotIsometric";
      j["tree"] = tree_to_json(m, *c.tree);
      j["branch_node"] = c.branch_node;
      const auto& pw = *c.primal;
      j["primal"] = {{"x", m.label(pw.x)},
                     {"y", m.label(pw.y)},
                     {"z", m.label(pw.z)},
                     {"mu", freevector_to_json(m, pw.mu)},
                     {"nu", freevector_to_json(m, pw.nu)},
                     {"dist", to_fraction(pw.dist)},
                     {"dist_approx", to_decimal(pw.dist)}};
      const auto& dw = *c.dual;
      j["dual"] = {{"z", m.label(dw.z)},
                   {"f", lipfunction_to_json(m, dw.f)},
                   {"g", lipfunction_to_json(m, dw.g)},
                   {"dist", to_fraction(dw.dist)},
                   {"dist_approx", to_decimal(dw.dist)}};
      break;
    }
  }
  return j;
}

Json bm_certificate_to_json(const Metric& m, const PeakingFamily& fam,
                            const BmCertificate& c) {
  Json j;
  j["formula_bound"] = to_fraction(c.formula_bound);
  j["formula_bound_approx"] = to_decimal(c.formula_bound);
  j["certified_bound"] = to_fraction(c.certified_bound);
  j["certified_bound_approx"] = to_decimal(c.certified_bound);
  j["epsilon"] = to_fraction(c.epsilon);
  Json subset = Json::array();
  for (int idx : c.subset)
    subset.push_back(Json::array(
        {m.label(fam.pairs[idx].first), m.label(fam.pairs[idx].second)}));
  j["subset"] = subset;
  j["worst_pair"] = Json::array(
      {Json::array({m.label(fam.pairs[c.worst_pair.first].first),
                    m.label(fam.pairs[c.worst_pair.first].second)}),
       Json::array({m.label(fam.pairs[c.worst_pair.second].first),
                    m.label(fam.pairs[c.worst_pair.second].second)})});
  j["worst_midpoint_norm"] = to_fraction(c.worst_midpoint_norm);
  return j;
}

}  // namespace freetree

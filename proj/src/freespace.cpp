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

#include "freetree/freespace.hpp"

#include <cassert>
#include <optional>

namespace freetree {

FreeVector molecule(const Metric& m, int x, int y) {
  assert(x != y);
  FreeVector v;
  Rat inv = Rat(1) / m.d(x, y);
  if (x != m.base()) v.set(x, inv);
  if (y != m.base()) v.set(y, Rat(-inv));
  return v;
}

Rat lip_norm(const Metric& m, const LipFunction& f) {
  Rat best = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = i + 1; j < m.size(); ++j) {
      Rat r = rat_abs(Rat(f(i) - f(j))) / m.d(i, j);
      if (r > best) best = r;
    }
  return best;
}

Rat pairing(const Metric& m, const FreeVector& a, const LipFunction& f) {
  (void)m;
  Rat s = 0;
  for (const auto& [p, v] : a.coeff) s += v * f(p);
  return s;
}

namespace {

// Successive-shortest-path min-cost flow in exact rational arithmetic.
// Small and dense by design: the ground graph is complete over M.
class MinCostFlow {
 public:
  explicit MinCostFlow(int n) : n_(n), g_(n) {}

  void add_edge(int u, int v, Rat cap, Rat cost) {
    g_[u].push_back({v, std::move(cap), Rat(0), cost,
                     static_cast<int>(g_[v].size())});
    g_[v].push_back({u, Rat(0), Rat(0), Rat(-cost),
                     static_cast<int>(g_[u].size()) - 1});
  }

  // Sends `amount` from s to t; returns total cost. Requires feasibility.
  Rat run(int s, int t, Rat amount) {
    pot_.assign(n_, Rat(0));
    Rat cost = 0;
    while (amount > 0) {
      auto [dist, par_node, par_arc] = dijkstra(s);
      assert(dist[t].has_value() && "flow demand infeasible");
      for (int v = 0; v < n_; ++v)
        if (dist[v]) pot_[v] += *dist[v];
      Rat push = amount;
      for (int v = t; v != s; v = par_node[v]) {
        const Arc& a = g_[par_node[v]][par_arc[v]];
        Rat res = a.cap - a.flow;
        if (res < push) push = res;
      }
      for (int v = t; v != s; v = par_node[v]) {
        Arc& a = g_[par_node[v]][par_arc[v]];
        a.flow += push;
        g_[v][a.rev].flow -= push;
        cost += push * a.cost;
      }
      amount -= push;
    }
    return cost;
  }

  const Rat& potential(int v) const { return pot_[v]; }

  // Positive net flow on u -> v arcs between real nodes.
  std::vector<TransportPlanEntry> arc_flows(int real_nodes) const {
    std::vector<TransportPlanEntry> out;
    for (int u = 0; u < real_nodes; ++u)
      for (const Arc& a : g_[u])
        if (a.to < real_nodes && a.cap > 0 && a.flow > 0)
          out.push_back({u, a.to, a.flow});
    return out;
  }

 private:
  struct Arc {
    int to;
    Rat cap, flow, cost;
    int rev;
  };

  std::tuple<std::vector<std::optional<Rat>>, std::vector<int>,
             std::vector<int>>
  dijkstra(int s) const {
    std::vector<std::optional<Rat>> dist(n_);
    std::vector<int> par_node(n_, -1), par_arc(n_, -1);
    std::vector<char> done(n_, 0);
    dist[s] = Rat(0);
    for (;;) {
      int u = -1;
      for (int v = 0; v < n_; ++v)
        if (!done[v] && dist[v] && (u < 0 || *dist[v] < *dist[u])) u = v;
      if (u < 0) break;
      done[u] = 1;
      for (int k = 0; k < static_cast<int>(g_[u].size()); ++k) {
        const Arc& a = g_[u][k];
        if (a.flow >= a.cap) continue;
        Rat nd = *dist[u] + a.cost + pot_[u] - pot_[a.to];
        if (!dist[a.to] || nd < *dist[a.to]) {
          dist[a.to] = nd;
          par_node[a.to] = u;
          par_arc[a.to] = k;
        }
      }
    }
    return {std::move(dist), std::move(par_node), std::move(par_arc)};
  }

  int n_;
  std::vector<std::vector<Arc>> g_;
  std::vector<Rat> pot_;
};

}  // namespace

TransportResult free_norm_certified(const Metric& m, const FreeVector& a) {
  const int n = m.size();
  TransportResult res;
  res.cost = 0;
  res.dual = LipFunction(n);
  if (a.is_zero()) return res;

  // Signed masses: coefficients on the non-base points, balancing mass on
  // the base.
  std::vector<Rat> b(n, Rat(0));
  Rat total = 0;
  for (const auto& [p, v] : a.coeff) {
    b[p] = v;
    total += v;
  }
  b[m.base()] = -total;

  Rat pos_mass = 0;
  for (int i = 0; i < n; ++i)
    if (b[i] > 0) pos_mass += b[i];
  if (pos_mass == 0) return res;  // only possible if all coefficients cancel

  const int S = n, T = n + 1;
  MinCostFlow flow(n + 2);
  // Keeping pair capacities above any attainable flow leaves residual arcs
  // in both directions, which makes the final potentials 1-Lipschitz.
  Rat big = pos_mass + 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      flow.add_edge(i, j, big, m.d(i, j));
      flow.add_edge(j, i, big, m.d(i, j));
    }
  for (int i = 0; i < n; ++i) {
    if (b[i] > 0) flow.add_edge(S, i, b[i], Rat(0));
    if (b[i] < 0) flow.add_edge(i, T, Rat(-b[i]), Rat(0));
  }
  res.cost = flow.run(S, T, pos_mass);

  // Kantorovich dual from the final node potentials.
  for (int i = 0; i < n; ++i)
    res.dual.values[i] = flow.potential(m.base()) - flow.potential(i);

  // Decompose arc flows into source-to-sink transport; flow support is
  // acyclic at the optimum (all distances are positive).
  auto arcs = flow.arc_flows(n);
  std::vector<std::vector<Rat>> f(n, std::vector<Rat>(n, Rat(0)));
  for (const auto& e : arcs) f[e.from][e.to] += e.amount;
  std::map<std::pair<int, int>, Rat> plan;
  std::vector<Rat> supply = b;
  for (int x = 0; x < n; ++x) {
    while (supply[x] > 0) {
      std::vector<int> path{x};
      int cur = x;
      Rat amt = supply[x];
      for (;;) {
        int next = -1;
        for (int v = 0; v < n; ++v)
          if (f[cur][v] > 0) {
            next = v;
            break;
          }
        if (next < 0) break;
        if (f[cur][next] < amt) amt = f[cur][next];
        path.push_back(next);
        cur = next;
        assert(path.size() <= static_cast<size_t>(n) && "cycle in flow");
      }
      assert(cur != x);
      for (size_t i = 0; i + 1 < path.size(); ++i)
        f[path[i]][path[i + 1]] -= amt;
      supply[x] -= amt;
      plan[{x, cur}] += amt;
    }
  }
  for (const auto& [k, v] : plan) res.plan.push_back({k.first, k.second, v});
  return res;
}

Rat free_norm(const Metric& m, const FreeVector& a) {
  return free_norm_certified(m, a).cost;
}

std::vector<Rat> godard_embed(const Metric& m, const Tree& t,
                              const FreeVector& a) {
  (void)m;
  std::vector<Rat> out;
  out.reserve(t.edges().size());
  for (size_t e = 0; e < t.edges().size(); ++e) {
    Rat net = 0;
    for (int p : t.far_side_points()[e]) net += a.get(p);
    out.push_back(Rat(t.edges()[e].len * net));
  }
  return out;
}

Rat free_norm_tree(const Metric& m, const Tree& t, const FreeVector& a) {
  Rat s = 0;
  for (const Rat& c : godard_embed(m, t, a)) s += rat_abs(c);
  return s;
}

}  // namespace freetree

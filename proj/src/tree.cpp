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

#include "freetree/tree.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>

namespace freetree {

namespace {

// Mutable undirected tree used during incremental insertion.
struct Builder {
  struct BEdge {
    int u, v;
    Rat len;
    bool alive = true;
  };
  std::vector<int> point;  // node -> M-point or -1
  std::vector<BEdge> edges;

  int add_node(int p) {
    point.push_back(p);
    return static_cast<int>(point.size()) - 1;
  }
  int add_edge(int u, int v, Rat len) {
    edges.push_back({u, v, std::move(len)});
    return static_cast<int>(edges.size()) - 1;
  }

  std::vector<std::vector<std::pair<int, int>>> adjacency() const {
    std::vector<std::vector<std::pair<int, int>>> adj(point.size());
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (!edges[e].alive) continue;
      adj[edges[e].u].push_back({edges[e].v, e});
      adj[edges[e].v].push_back({edges[e].u, e});
    }
    return adj;
  }

  // Edge ids along the path a -> b.
  std::vector<int> path_edges(int a, int b) const {
    auto adj = adjacency();
    std::vector<int> par(point.size(), -1), pare(point.size(), -1);
    std::vector<char> seen(point.size(), 0);
    std::deque<int> q{a};
    seen[a] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (auto [w, e] : adj[u])
        if (!seen[w]) {
          seen[w] = 1;
          par[w] = u;
          pare[w] = e;
          q.push_back(w);
        }
    }
    std::vector<int> out;
    for (int cur = b; cur != a; cur = par[cur]) out.push_back(pare[cur]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  // Node at distance t from a on the path a -> b; splits an edge if needed.
  int locate_and_split(int a, int b, const Rat& t) {
    if (t == 0) return a;
    Rat acc = 0;
    int cur = a;
    for (int e : path_edges(a, b)) {
      int next = edges[e].u == cur ? edges[e].v : edges[e].u;
      Rat end = acc + edges[e].len;
      if (t < end) {
        Rat off = t - acc;  // distance from cur into edge e
        int s = add_node(-1);
        Rat rest = edges[e].len - off;
        edges[e].alive = false;
        add_edge(cur, s, off);
        add_edge(s, next, rest);
        return s;
      }
      acc = end;
      cur = next;
      if (t == acc) return cur;
    }
    assert(false && "t exceeds path length");
    return -1;
  }

  // Splice out Steiner nodes of degree 2, summing edge lengths.
  void canonicalize() {
    bool changed = true;
    while (changed) {
      changed = false;
      auto adj = adjacency();
      for (int v = 0; v < static_cast<int>(point.size()); ++v) {
        if (point[v] != -1 || adj[v].size() != 2) continue;
        auto [n1, e1] = adj[v][0];
        auto [n2, e2] = adj[v][1];
        edges[e1].alive = false;
        edges[e2].alive = false;
        add_edge(n1, n2, Rat(edges[e1].len + edges[e2].len));
        changed = true;
        break;
      }
    }
  }
};

}  // namespace

Tree Tree::realize(const Metric& m) {
  if (auto q = four_point_violation(m)) throw NotZeroHyperbolic(*q);

  const auto order = m.sorted_order();
  const int r = order[0];
  Builder bld;
  std::vector<int> node_of(m.size(), -1);
  node_of[r] = bld.add_node(r);

  for (size_t k = 1; k < order.size(); ++k) {
    const int w = order[k];
    // Deepest attachment along [r, x*] over already-inserted points.
    int best = -1;
    Rat alpha = 0;
    for (size_t j = 0; j < k; ++j) {
      int x = order[j];
      Rat a = gromov_product(m, x, w, r);
      if (best < 0 || a > alpha) {
        best = x;
        alpha = a;
      }
    }
    int at = bld.locate_and_split(node_of[r], node_of[best], alpha);
    Rat pendant = m.d(r, w) - alpha;
    if (pendant == 0) {
      assert(bld.point[at] == -1 && "two M-points at one tree position");
      bld.point[at] = w;
      node_of[w] = at;
    } else {
      node_of[w] = bld.add_node(w);
      bld.add_edge(at, node_of[w], pendant);
    }
  }
  bld.canonicalize();

  // Deterministic ids: M-points in label order, then Steiner nodes in BFS
  // order from the base.
  const int n = m.size();
  std::vector<int> newid(bld.point.size(), -1);
  for (int i = 0; i < n; ++i) newid[node_of[order[i]]] = i;
  int live = n;
  {
    // Spliced-out Steiner nodes are unreachable and get no id.
    auto adj = bld.adjacency();
    std::vector<char> seen(bld.point.size(), 0);
    std::deque<int> q{node_of[m.base()]};
    seen[node_of[m.base()]] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      if (bld.point[u] == -1) newid[u] = live++;
      std::sort(adj[u].begin(), adj[u].end());
      for (auto [v, e] : adj[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
  }

  Tree t;
  t.nodes_.resize(live);
  for (size_t old = 0; old < bld.point.size(); ++old)
    if (newid[old] >= 0) t.nodes_[newid[old]].point = bld.point[old];
  t.point_node_.assign(n, -1);
  for (int v = 0; v < t.node_count(); ++v)
    if (t.nodes_[v].point >= 0) t.point_node_[t.nodes_[v].point] = v;
  t.base_node_ = t.point_node_[m.base()];
  for (const auto& e : bld.edges) {
    if (!e.alive) continue;
    assert(e.len > 0);
    t.edges_.push_back({newid[e.u], newid[e.v], e.len});
  }
  t.finalize();
  return t;
}

void Tree::finalize() {
  adj_.assign(node_count(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj_[edges_[e].u].push_back({edges_[e].v, e});
    adj_[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  // Re-list edges in BFS order from the base, oriented parent -> child.
  std::vector<TreeEdge> ordered;
  std::vector<char> seen(node_count(), 0);
  std::deque<int> q{base_node_};
  seen[base_node_] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [v, e] : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        ordered.push_back({u, v, edges_[e].len});
        q.push_back(v);
      }
  }
  assert(ordered.size() == edges_.size() && "edge graph must be a tree");
  edges_ = std::move(ordered);
  adj_.assign(node_count(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    adj_[edges_[e].u].push_back({edges_[e].v, e});
    adj_[edges_[e].v].push_back({edges_[e].u, e});
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  // All-pairs node distances (the node count is at most 2|M| - 2).
  nodedist_.assign(node_count(), std::vector<Rat>(node_count(), Rat(0)));
  for (int s = 0; s < node_count(); ++s) {
    std::vector<char> vis(node_count(), 0);
    std::deque<int> bfs{s};
    vis[s] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      for (auto [v, e] : adj_[u])
        if (!vis[v]) {
          vis[v] = 1;
          nodedist_[s][v] = nodedist_[s][u] + edges_[e].len;
          bfs.push_back(v);
        }
    }
  }

  // M-points on the child side of each edge.
  far_points_.assign(edges_.size(), {});
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    std::vector<char> vis(node_count(), 0);
    vis[edges_[e].u] = 1;
    std::deque<int> bfs{edges_[e].v};
    vis[edges_[e].v] = 1;
    while (!bfs.empty()) {
      int u = bfs.front();
      bfs.pop_front();
      if (nodes_[u].point >= 0) far_points_[e].push_back(nodes_[u].point);
      for (auto [v, e2] : adj_[u])
        if (!vis[v]) {
          vis[v] = 1;
          bfs.push_back(v);
        }
    }
    std::sort(far_points_[e].begin(), far_points_[e].end());
  }
}

std::vector<int> Tree::branching_points() const {
  std::vector<int> out;
  for (int v = 0; v < node_count(); ++v)
    if (degree(v) >= 3) out.push_back(v);
  return out;
}

std::vector<int> Tree::missing_branch_points() const {
  std::vector<int> out;
  for (int v : branching_points())
    if (nodes_[v].point < 0) out.push_back(v);
  return out;
}

std::vector<int> Tree::path_nodes(int a, int b) const {
  std::vector<int> par(node_count(), -1);
  std::vector<char> seen(node_count(), 0);
  std::deque<int> q{a};
  seen[a] = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (auto [v, e] : adj_[u])
      if (!seen[v]) {
        seen[v] = 1;
        par[v] = u;
        q.push_back(v);
      }
  }
  std::vector<int> out;
  for (int cur = b; cur != -1; cur = par[cur]) {
    out.push_back(cur);
    if (cur == a) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> Tree::segment_interior_points(int x, int y) const {
  auto path = path_nodes(node_of_point(x), node_of_point(y));
  std::vector<int> out;
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (nodes_[path[i]].point >= 0) out.push_back(nodes_[path[i]].point);
  return out;
}

TreePoint Tree::locate_on_path(int a, int b, const Rat& t) const {
  if (t == 0) return TreePoint::at_node(a);
  auto path = path_nodes(a, b);
  Rat acc = 0;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    int u = path[i], v = path[i + 1];
    int eid = -1;
    for (auto [w, e] : adj_[u])
      if (w == v) eid = e;
    Rat end = acc + edges_[eid].len;
    if (t == end) return TreePoint::at_node(v);
    if (t < end) {
      Rat off = t - acc;
      // Offsets are stored from the edge's parent endpoint u.
      if (edges_[eid].u == u) return TreePoint::on_edge(eid, off);
      return TreePoint::on_edge(eid, Rat(edges_[eid].len - off));
    }
    acc = end;
  }
  assert(false && "t exceeds path length");
  return TreePoint::at_node(b);
}

std::pair<TreePoint, Rat> Tree::project(int x, int y, int w) const {
  // d(x, pi) is the Gromov product (y|w)_x in the tree metric; the triangle
  // inequality keeps it within [0, d(x,y)], no clamping needed.
  Rat t = (nodedist_[x][y] + nodedist_[x][w] - nodedist_[y][w]) / 2;
  TreePoint p = locate_on_path(x, y, t);
  return {p, Rat(nodedist_[x][w] - t)};
}

Rat Tree::tree_distance(const TreePoint& p, const TreePoint& q) const {
  if (p.is_node() && q.is_node()) return nodedist_[p.node][q.node];
  if (p.is_node()) return tree_distance(q, p);
  const auto& ep = edges_[p.edge];
  if (!q.is_node()) {
    if (p.edge == q.edge) return rat_abs(Rat(p.offset - q.offset));
    const auto& eq = edges_[q.edge];
    Rat best = p.offset + nodedist_[ep.u][eq.u] + q.offset;
    auto consider = [&](const Rat& c) {
      if (c < best) best = c;
    };
    consider(p.offset + nodedist_[ep.u][eq.v] + (eq.len - q.offset));
    consider((ep.len - p.offset) + nodedist_[ep.v][eq.u] + q.offset);
    consider((ep.len - p.offset) + nodedist_[ep.v][eq.v] + (eq.len - q.offset));
    return best;
  }
  Rat via_u = p.offset + nodedist_[ep.u][q.node];
  Rat via_v = (ep.len - p.offset) + nodedist_[ep.v][q.node];
  return via_u < via_v ? via_u : via_v;
}

std::vector<Tree::Branch> Tree::branches_at(int b) const {
  std::vector<Branch> out;
  std::vector<char> seen(node_count(), 0);
  seen[b] = 1;
  for (int start = 0; start < node_count(); ++start) {
    if (seen[start]) continue;
    Branch br;
    std::deque<int> q{start};
    seen[start] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      br.nodes.push_back(u);
      if (nodes_[u].point >= 0) br.points.push_back(nodes_[u].point);
      for (auto [v, e] : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
    }
    std::sort(br.nodes.begin(), br.nodes.end());
    std::sort(br.points.begin(), br.points.end());
    out.push_back(std::move(br));
  }
  std::sort(out.begin(), out.end(), [](const Branch& a, const Branch& c) {
    return a.nodes.front() < c.nodes.front();
  });
  return out;
}

}  // namespace freetree

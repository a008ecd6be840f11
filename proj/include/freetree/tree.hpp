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

#pragma once

#include <utility>
#include <vector>

#include "freetree/metric.hpp"

namespace freetree {

struct TreeNode {
  int point = -1;  // index into the metric space, or -1 for a Steiner node
};

// Oriented parent -> child when the tree is rooted at the base point's node.
struct TreeEdge {
  int u = -1, v = -1;
  Rat len;
};

// A point of the realized tree: either a node, or a position strictly inside
// an edge, measured from the edge's parent endpoint u.
struct TreePoint {
  int node = -1;
  int edge = -1;
  Rat offset;

  static TreePoint at_node(int id) {
    TreePoint p;
    p.node = id;
    return p;
  }
  static TreePoint on_edge(int edge, Rat offset) {
    TreePoint p;
    p.edge = edge;
    p.offset = std::move(offset);
    return p;
  }
  bool is_node() const { return node >= 0; }
};

// The minimal R-tree containing a finite 0-hyperbolic space. Node ids are
// deterministic: points of M in label-sorted order first, then Steiner nodes
// in breadth-first order from the base. Edges are listed in breadth-first
// order, oriented away from the base. Immutable after construction.
class Tree {
 public:
  // Incremental insertion in label-sorted order; throws
  // NotZeroHyperbolic(quadruple) when the 4-point condition fails.
  static Tree realize(const Metric& m);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  int node_of_point(int point) const { return point_node_[point]; }
  int base_node() const { return base_node_; }
  int degree(int node) const { return static_cast<int>(adj_[node].size()); }

  // Node ids of tree-degree >= 3, ascending.
  std::vector<int> branching_points() const;
  // Steiner branching nodes; empty iff M contains all branching points.
  std::vector<int> missing_branch_points() const;

  // M-points strictly inside the tree path from point x to point y.
  std::vector<int> segment_interior_points(int x, int y) const;

  // Metric projection of node w onto the segment [x, y] (node ids), together
  // with the distance from w to the projection.
  std::pair<TreePoint, Rat> project(int x, int y, int w) const;

  Rat node_distance(int u, int v) const { return nodedist_[u][v]; }
  Rat tree_distance(const TreePoint& p, const TreePoint& q) const;

  // TreePoint at distance t from node a along the path to node b.
  // Requires 0 <= t <= node_distance(a, b).
  TreePoint locate_on_path(int a, int b, const Rat& t) const;

  // Inclusive list of nodes on the path between two nodes.
  std::vector<int> path_nodes(int a, int b) const;

  // Connected components of the tree with node b removed, each listed as
  // (component nodes, M-points in it), ordered by smallest node id.
  struct Branch {
    std::vector<int> nodes;
    std::vector<int> points;
  };
  std::vector<Branch> branches_at(int b) const;

  // M-points on the child side of each edge (edge order).
  const std::vector<std::vector<int>>& far_side_points() const {
    return far_points_;
  }

 private:
  Tree() = default;
  void finalize();  // adjacency, rooting, distances, far sides

  std::vector<TreeNode> nodes_;
  std::vector<TreeEdge> edges_;
  std::vector<int> point_node_;
  int base_node_ = -1;
  std::vector<std::vector<std::pair<int, int>>> adj_;  // (neighbor, edge id)
  std::vector<std::vector<Rat>> nodedist_;
  std::vector<std::vector<int>> far_points_;
};

}  // namespace freetree

// Copyright 2026 The crossbcast Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <limits>

#include "crossbcast/planners.hpp"

namespace crossbcast {

std::vector<std::pair<NodeId, NodeId>> rooted_forest_edges(const Placement& placement,
                                                           std::span<const NodeId> vertices,
                                                           std::span<const NodeId> roots) {
  const std::size_t k = vertices.size();
  std::vector<std::pair<NodeId, NodeId>> edges;
  if (k == 0) return edges;
  if (roots.empty()) throw ValidationError("spanning forest needs a root");

  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<char> in_tree(k, 0);
  std::vector<double> key(k, kInf);
  std::vector<NodeId> via(k, roots.front());
  auto relax = [&](NodeId u) {
    for (std::size_t i = 0; i < k; ++i) {
      if (in_tree[i]) continue;
      const double d = placement.distance(u, vertices[i]);
      if (d < key[i] || (d == key[i] && u < via[i])) {
        key[i] = d;
        via[i] = u;
      }
    }
  };
  std::size_t left = k;
  for (NodeId root : roots) {
    const auto pos = std::find(vertices.begin(), vertices.end(), root);
    if (pos == vertices.end()) throw ValidationError("tree root is not among the vertices");
    const auto r = static_cast<std::size_t>(pos - vertices.begin());
    if (!in_tree[r]) --left;
    in_tree[r] = 1;
  }
  for (NodeId root : roots) relax(root);
  edges.reserve(left);
  for (; left > 0; --left) {
    std::size_t pick = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (in_tree[i]) continue;
      if (pick == k || key[i] < key[pick] ||
          (key[i] == key[pick] && vertices[i] < vertices[pick])) {
        pick = i;
      }
    }
    in_tree[pick] = 1;
    edges.emplace_back(via[pick], vertices[pick]);
    relax(vertices[pick]);
  }
  return edges;
}

std::vector<std::pair<NodeId, NodeId>> rooted_mst_edges(const Placement& placement,
                                                        std::span<const NodeId> vertices,
                                                        NodeId root) {
  return rooted_forest_edges(placement, vertices, std::span<const NodeId>(&root, 1));
}

DiamondGraph diamond_graph(const CrossNetwork& network) {
  DiamondGraph g;
  g.root = network.diamond_root();
  g.vertices.push_back(g.root);
  for (Segment s : {Segment::III, Segment::IV, Segment::V}) {
    if (auto f = network.first_of(s)) g.vertices.push_back(*f);
  }
  g.tree_edges = rooted_mst_edges(network.placement(), g.vertices, g.root);
  return g;
}

RangeAssignment distributed_assignment(const CrossNetwork& network, double alpha) {
  const NodeId s = network.source();
  std::vector<double> r(network.size(), 0.0);
  for (NodeId a = 1; a < network.size(); ++a) r[a] = next_gap(network, a);

  const DiamondGraph diamond = diamond_graph(network);
  double source_children = 0.0;
  for (const auto& [parent, child] : diamond.tree_edges) {
    const double d = network.distance(parent, child);
    if (parent == s) source_children = std::max(source_children, d);
    else r[parent] = std::max(r[parent], d);
  }

  double rs = 0.0;
  if (auto f1 = network.first_of(Segment::I)) rs = network.distance(s, *f1);
  if (auto f2 = network.first_of(Segment::II)) {
    rs = std::max(rs, network.distance(s, *f2));
  } else {
    rs = std::max(rs, source_children);
  }
  r[s] = rs;
  return RangeAssignment(std::move(r), alpha);
}

RangeAssignment mst_assignment(const Placement& placement, double alpha) {
  if (placement.size() >= 3 && placement.min_distance_gap() <= kDistinctDistanceTol) {
    throw TiedWeights("MST assignment needs distinct pairwise distances");
  }
  std::vector<NodeId> all(placement.size());
  for (NodeId i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<double> r(placement.size(), 0.0);
  for (const auto& [parent, child] : rooted_mst_edges(placement, all, placement.source())) {
    r[parent] = std::max(r[parent], placement.distance(parent, child));
  }
  return RangeAssignment(std::move(r), alpha);
}

}  // namespace crossbcast

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

// Independent reference implementations used only by the tests. Nothing
// here calls into the planners; only Point2 / Placement geometry is shared.

#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "crossbcast/geometry.hpp"

namespace oracle {

using crossbcast::NodeId;
using crossbcast::Point2;
using Edge = std::pair<std::size_t, std::size_t>;

inline double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Every labelled spanning tree on k vertices, decoded from all k^(k-2)
/// Pruefer sequences.
inline std::vector<std::vector<Edge>> all_spanning_trees(std::size_t k) {
  std::vector<std::vector<Edge>> out;
  if (k < 2) {
    out.push_back({});
    return out;
  }
  if (k == 2) {
    out.push_back({{0, 1}});
    return out;
  }
  std::vector<std::size_t> seq(k - 2, 0);
  while (true) {
    std::vector<std::size_t> degree(k, 1);
    for (std::size_t v : seq) ++degree[v];
    std::vector<Edge> edges;
    for (std::size_t v : seq) {
      for (std::size_t leaf = 0; leaf < k; ++leaf) {
        if (degree[leaf] == 1) {
          edges.emplace_back(leaf, v);
          --degree[leaf];
          --degree[v];
          break;
        }
      }
    }
    std::size_t u = k, w = k;
    for (std::size_t v = 0; v < k; ++v) {
      if (degree[v] == 1) (u == k ? u : w) = v;
    }
    edges.emplace_back(u, w);
    out.push_back(std::move(edges));
    std::size_t i = 0;
    while (i < seq.size() && ++seq[i] == k) seq[i++] = 0;
    if (i == seq.size()) break;
  }
  return out;
}

/// Minimum spanning tree over `pts` by exhaustive enumeration, oriented away
/// from `root`; returns each vertex's longest child edge (0 for leaves).
inline std::vector<double> enumerated_mst_child_max(const std::vector<Point2>& pts,
                                                    std::size_t root) {
  const std::size_t k = pts.size();
  double best = std::numeric_limits<double>::infinity();
  std::vector<Edge> best_tree;
  for (const auto& tree : all_spanning_trees(k)) {
    double w = 0.0;
    for (auto [a, b] : tree) w += dist(pts[a], pts[b]);
    if (w < best) {
      best = w;
      best_tree = tree;
    }
  }
  std::vector<double> out(k, 0.0);
  std::vector<char> seen(k, 0);
  std::function<void(std::size_t)> walk = [&](std::size_t v) {
    seen[v] = 1;
    for (auto [a, b] : best_tree) {
      const std::size_t other = a == v ? b : (b == v ? a : k);
      if (other == k || seen[other]) continue;
      out[v] = std::max(out[v], dist(pts[v], pts[other]));
      walk(other);
    }
  };
  walk(root);
  return out;
}

/// Broadcast closure from `source` with plain repeated scanning.
inline bool delivers(const std::vector<Point2>& pts, std::size_t source,
                     const std::vector<double>& r) {
  std::vector<char> got(pts.size(), 0);
  got[source] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t u = 0; u < pts.size(); ++u) {
      if (!got[u]) continue;
      for (std::size_t v = 0; v < pts.size(); ++v) {
        if (!got[v] && dist(pts[u], pts[v]) <= r[u] * (1 + 1e-12) + 1e-12) got[v] = grew = 1;
      }
    }
  }
  for (char g : got) {
    if (!g) return false;
  }
  return true;
}

/// Minimum cost over every assignment with each range in {0} ∪ {distances}:
/// a full odometer, no pruning. Only for tiny N.
inline double exhaustive_min_cost(const std::vector<Point2>& pts, std::size_t source,
                                  double alpha) {
  const std::size_t n = pts.size();
  std::vector<std::vector<double>> options(n);
  for (std::size_t a = 0; a < n; ++a) {
    options[a].push_back(0.0);
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b) options[a].push_back(dist(pts[a], pts[b]));
    }
  }
  std::vector<std::size_t> pick(n, 0);
  std::vector<double> r(n);
  double best = std::numeric_limits<double>::infinity();
  while (true) {
    double c = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      r[a] = options[a][pick[a]];
      c += std::pow(r[a], alpha);
    }
    if (c < best && delivers(pts, source, r)) best = c;
    std::size_t i = 0;
    while (i < n && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == n) break;
  }
  return best;
}

}  // namespace oracle

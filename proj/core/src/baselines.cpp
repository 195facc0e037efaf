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
#include <numeric>

#include "crossbcast/planners.hpp"

namespace crossbcast {

RangeAssignment bip_assignment(const Placement& placement, double alpha) {
  const std::size_t n = placement.size();
  const NodeId s = placement.source();
  constexpr double kInf = std::numeric_limits<double>::infinity();

  std::vector<char> in_tree(n, 0);
  std::vector<double> power(n, 0.0);
  std::vector<double> range(n, 0.0);
  // Cheapest known way to add each outside node: (incremental cost, transmitter).
  std::vector<double> best_cost(n, kInf);
  std::vector<NodeId> best_tx(n, s);

  auto offer = [&](NodeId tx, NodeId j) {
    const double c = std::max(0.0, power_of(placement.distance(tx, j), alpha) - power[tx]);
    if (c < best_cost[j] || (c == best_cost[j] && tx < best_tx[j])) {
      best_cost[j] = c;
      best_tx[j] = tx;
    }
  };

  in_tree[s] = 1;
  for (NodeId j = 0; j < n; ++j) {
    if (!in_tree[j]) offer(s, j);
  }
  for (std::size_t step = 1; step < n; ++step) {
    NodeId pick = n;
    for (NodeId j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      if (pick == n || best_cost[j] < best_cost[pick] ||
          (best_cost[j] == best_cost[pick] && best_tx[j] < best_tx[pick])) {
        pick = j;
      }
    }
    const NodeId tx = best_tx[pick];
    const double d = placement.distance(tx, pick);
    if (d > range[tx]) {
      range[tx] = d;
      power[tx] = power_of(d, alpha);
    }
    in_tree[pick] = 1;
    for (NodeId j = 0; j < n; ++j) {
      if (in_tree[j]) continue;
      offer(tx, j);  // tx got cheaper to extend
      offer(pick, j);
    }
  }
  return RangeAssignment(std::move(range), alpha);
}

RangeAssignment sweep(const Placement& placement, const RangeAssignment& assignment) {
  if (!reaches_all(placement, assignment.ranges())) {
    throw InfeasibleInput("sweep needs an assignment that already delivers to every node");
  }
  std::vector<double> r(assignment.ranges().begin(), assignment.ranges().end());
  std::vector<NodeId> order(r.size());
  bool changed = true;
  while (changed) {
    changed = false;
    std::iota(order.begin(), order.end(), NodeId{0});
    std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return r[a] > r[b]; });
    for (NodeId i : order) {
      if (r[i] <= 0.0) break;
      const double saved = r[i];
      r[i] = 0.0;
      if (reaches_all(placement, r)) {
        changed = true;
      } else {
        r[i] = saved;
      }
    }
  }
  return RangeAssignment(std::move(r), assignment.alpha());
}

}  // namespace crossbcast

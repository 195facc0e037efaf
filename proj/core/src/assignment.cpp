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

#include "crossbcast/assignment.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "crossbcast/errors.hpp"

namespace crossbcast {
namespace {

void check_alpha(double alpha) {
  if (!(alpha >= kMinAlpha && alpha <= kMaxAlpha)) {
    throw ValidationError("alpha must lie in [2, 6], got " + std::to_string(alpha));
  }
}

void check_range(double r) {
  if (!std::isfinite(r) || r < 0.0) {
    throw ValidationError("ranges must be finite and non-negative");
  }
}

}  // namespace

RangeAssignment::RangeAssignment(std::vector<double> ranges, double alpha)
    : ranges_(std::move(ranges)), alpha_(alpha) {
  check_alpha(alpha_);
  for (double r : ranges_) check_range(r);
}

void RangeAssignment::set(NodeId id, double range) {
  check_range(range);
  ranges_.at(id) = range;
}

double cost(std::span<const double> ranges, double alpha) {
  double total = 0.0;
  for (double r : ranges) total += power_of(r, alpha);
  return total;
}

double cost(const RangeAssignment& assignment) {
  return cost(assignment.ranges(), assignment.alpha());
}

BroadcastOutcome simulate_broadcast(const Placement& placement, std::span<const double> ranges) {
  const std::size_t n = placement.size();
  if (ranges.size() != n) throw ValidationError("assignment size does not match the network");
  BroadcastOutcome out;
  out.reached.assign(n, 0);
  out.parent.assign(n, std::nullopt);
  const NodeId s = placement.source();
  out.reached[s] = 1;
  out.reached_count = 1;

  std::vector<NodeId> wave{s};
  std::vector<NodeId> next;
  while (!wave.empty()) {
    next.clear();
    for (NodeId u : wave) {
      if (ranges[u] <= 0.0) continue;
      for (NodeId v = 0; v < n; ++v) {
        if (out.reached[v] || !within_range(placement.distance(u, v), ranges[u])) continue;
        out.reached[v] = 1;
        out.parent[v] = u;
        next.push_back(v);
      }
    }
    if (next.empty()) break;
    ++out.rounds;
    out.reached_count += next.size();
    std::sort(next.begin(), next.end());
    wave.swap(next);
  }
  return out;
}

bool reaches_all(const Placement& placement, std::span<const double> ranges) {
  const std::size_t n = placement.size();
  if (ranges.size() != n) throw ValidationError("assignment size does not match the network");
  std::vector<char> reached(n, 0);
  std::vector<NodeId> stack{placement.source()};
  reached[placement.source()] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    if (ranges[u] <= 0.0) continue;
    for (NodeId v = 0; v < n; ++v) {
      if (!reached[v] && within_range(placement.distance(u, v), ranges[u])) {
        reached[v] = 1;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

bool depends_on(const Placement& placement, std::span<const double> ranges, NodeId b, NodeId a) {
  if (a == b) return false;
  std::vector<double> knocked(ranges.begin(), ranges.end());
  knocked.at(a) = 0.0;
  return !simulate_broadcast(placement, knocked).is_reached(b);
}

IncreasedRangeAudit increased_range_audit(const CrossNetwork& network,
                                          const RangeAssignment& assignment) {
  IncreasedRangeAudit audit;
  for (NodeId a : network.n_hat()) {
    const double m = next_gap(network, a);
    const double r = assignment[a];
    if (r > m && !nearly_equal(r, m)) {
      audit.increased.push_back(a);
    } else if (!nearly_equal(r, 0.0) && !nearly_equal(r, m)) {
      audit.shape_ok = false;
    }
  }
  return audit;
}

}  // namespace crossbcast

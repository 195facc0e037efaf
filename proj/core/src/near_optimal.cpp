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
#include <array>
#include <limits>
#include <stdexcept>

#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

bool is_far_side(Segment s) {
  return s == Segment::III || s == Segment::IV || s == Segment::V;
}

// One pass of the M-or-zero walk over a fixed segment ordering.
class OrderingWalk {
 public:
  OrderingWalk(const CrossNetwork& network, double alpha)
      : net_(network), alpha_(alpha), r_(network.size(), 0.0), tag_(network.size(), 0) {}

  // Returns false when some node is reached by the walk before anything has
  // delivered to it.
  bool run(const std::array<Segment, 5>& order) {
    const NodeId s = net_.source();
    std::fill(r_.begin(), r_.end(), 0.0);
    std::fill(tag_.begin(), tag_.end(), 0);
    tag_[s] = 1;

    // An empty Segment II stays in the ordering: it is where the source
    // itself may be asked to reach the next far-side segment.
    std::vector<Segment> visit;
    for (Segment seg : order) {
      if (!net_.segment_empty(seg) || seg == Segment::II) visit.push_back(seg);
    }
    for (Segment seg : visit) {
      if (auto f = net_.first_of(seg)) {
        r_[s] = net_.distance(s, *f);
        break;
      }
    }
    tag_receivers(s);

    for (std::size_t k = 0; k < visit.size(); ++k) {
      const Segment seg = visit[k];
      const auto nodes = net_.segment_nodes(seg);
      for (NodeId node : nodes) {
        if (!tag_[node]) return false;
        const auto next = next_adjacent(net_, node);
        if (next && !tag_[*next]) {
          r_[node] = net_.distance(node, *next);
          tag_[*next] = 1;
        } else {
          r_[node] = 0.0;
        }
      }

      if (!nodes.empty()) {
        tag_receivers(argmax(nodes, [&](NodeId m) { return coverage_extents(net_, m, r_[m]).perp; }));
        tag_receivers(argmax(nodes, [&](NodeId m) { return coverage_extents(net_, m, r_[m]).oppo; }));
        if (seg == Segment::I || seg == Segment::II) {
          tag_receivers(argmax(nodes, [&](NodeId m) { return r_[m] - net_.distance(s, m); }));
        }
      }

      if (seg == Segment::I || k + 1 >= visit.size()) continue;
      const Segment upcoming = visit[k + 1];
      if (!is_far_side(upcoming)) continue;
      const NodeId target = *net_.first_of(upcoming);
      if (tag_[target]) continue;

      NodeId sn = s;
      if (seg == Segment::II) {
        sn = net_.diamond_root();
      } else {
        sn = *net_.first_of(seg);
      }
      // Never shrink: sn may already be covering nodes that were tagged.
      r_[sn] = std::max(r_[sn], net_.distance(sn, target));
      tag_receivers(sn);
      if (is_far_side(seg)) {
        for (NodeId i : nodes) {
          if (i == sn) continue;
          const auto next = next_adjacent(net_, i);
          if (next && within_range(net_.distance(sn, *next), r_[sn])) r_[i] = 0.0;
        }
      }
    }
    return true;
  }

  const std::vector<double>& ranges() const { return r_; }

 private:
  template <typename Score>
  NodeId argmax(std::span<const NodeId> nodes, Score score) const {
    NodeId best = nodes.front();
    double best_score = score(best);
    for (NodeId m : nodes.subspan(1)) {
      const double v = score(m);
      if (v > best_score) {
        best = m;
        best_score = v;
      }
    }
    return best;
  }

  void tag_receivers(NodeId node) {
    if (r_[node] <= 0.0) return;
    for (NodeId u = 0; u < net_.size(); ++u) {
      if (within_range(net_.distance(node, u), r_[node])) tag_[u] = 1;
    }
  }

  const CrossNetwork& net_;
  double alpha_;
  std::vector<double> r_;
  std::vector<char> tag_;
};

}  // namespace

RangeAssignment near_optimal_assignment(const CrossNetwork& network, double alpha) {
  if (network.size() == 1) return RangeAssignment::zeros(1, alpha);

  std::array<Segment, 5> order = kSegments;
  OrderingWalk walk(network, alpha);
  std::vector<double> best;
  double best_cost = std::numeric_limits<double>::infinity();
  do {
    if (!walk.run(order)) continue;
    const double c = cost(walk.ranges(), alpha);
    if (c < best_cost) {
      best_cost = c;
      best = walk.ranges();
    }
  } while (std::next_permutation(order.begin(), order.end()));

  if (best.empty() || !reaches_all(network.placement(), best)) {
    throw std::logic_error("near-optimal walk produced no delivering assignment");
  }
  return RangeAssignment(std::move(best), alpha);
}

}  // namespace crossbcast

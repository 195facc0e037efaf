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

#include "crossbcast/cross_network.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crossbcast/errors.hpp"

namespace crossbcast {
namespace {

// Coordinates this close to an axis are snapped onto it on ingest.
constexpr double kAxisSnap = 1e-9;

Point2 snap(Point2 p) {
  if (std::abs(p.x) <= kAxisSnap) p.x = 0.0;
  if (std::abs(p.y) <= kAxisSnap) p.y = 0.0;
  return p;
}

// Rotations by multiples of 90 degrees are exact in floating point.
Point2 rotate_quarter_turns(Point2 p, int turns) {
  switch (turns & 3) {
    case 1: return {-p.y, p.x};
    case 2: return {-p.x, -p.y};
    case 3: return {p.y, -p.x};
    default: return p;
  }
}

std::string describe(const Point2& p) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << p.x << ", " << p.y << ")";
  return os.str();
}

}  // namespace

std::string_view to_string(Segment s) {
  switch (s) {
    case Segment::I: return "I";
    case Segment::II: return "II";
    case Segment::III: return "III";
    case Segment::IV: return "IV";
    case Segment::V: return "V";
  }
  return "?";
}

CrossNetwork CrossNetwork::from_points(Point2 source, std::span<const Point2> others,
                                       double arm_half_length, Options options) {
  if (!(arm_half_length > 0.0) || !std::isfinite(arm_half_length)) {
    throw ValidationError("arm_half_length must be a positive finite number");
  }
  source = snap(source);
  if (source.x != 0.0 && source.y != 0.0) {
    throw ValidationError("source " + describe(source) + " is not on either axis");
  }
  // Quarter turns that bring the source onto the non-positive x-axis.
  int turns = 0;
  if (source.x > 0.0) turns = 2;
  else if (source.y > 0.0) turns = 1;
  else if (source.y < 0.0) turns = 3;

  std::vector<Point2> points;
  points.reserve(others.size() + 1);
  points.push_back(rotate_quarter_turns(source, turns));
  for (const Point2& raw : others) {
    const Point2 p = snap(raw);
    if (p.x != 0.0 && p.y != 0.0) {
      throw ValidationError("node " + describe(raw) + " is not on either axis");
    }
    points.push_back(rotate_quarter_turns(p, turns));
  }

  CrossNetwork net;
  net.arm_half_length_ = arm_half_length;
  net.placement_ = Placement(std::move(points), 0);
  const std::size_t n = net.placement_.size();

  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = a + 1; b < n; ++b) {
      if (net.placement_.position(a) == net.placement_.position(b)) {
        throw ValidationError("nodes " + std::to_string(a) + " and " + std::to_string(b) +
                              " share position " + describe(net.placement_.position(a)));
      }
    }
  }
  if (options.require_distinct_distances && n >= 3 &&
      net.placement_.min_distance_gap() <= kDistinctDistanceTol) {
    throw TiedWeights("pairwise distances are not distinct (gap <= 1e-9)");
  }

  net.segment_.assign(n, Segment::I);
  net.rank_.assign(n, 0);
  for (NodeId id = 1; id < n; ++id) {
    const Segment s = classify_segment(net, id);
    net.segment_[id] = s;
    net.by_segment_[index_of(s)].push_back(id);
  }
  for (auto& list : net.by_segment_) {
    std::sort(list.begin(), list.end(), [&](NodeId a, NodeId b) {
      return net.distance(0, a) < net.distance(0, b);
    });
    for (std::size_t r = 0; r < list.size(); ++r) net.rank_[list[r]] = r;
  }
  return net;
}

std::optional<NodeId> CrossNetwork::first_of(Segment s) const {
  const auto& list = by_segment_[index_of(s)];
  if (list.empty()) return std::nullopt;
  return list.front();
}

std::optional<NodeId> CrossNetwork::last_of(Segment s) const {
  const auto& list = by_segment_[index_of(s)];
  if (list.empty()) return std::nullopt;
  return list.back();
}

double CrossNetwork::distance_to_intersection(NodeId id) const {
  const Point2& p = placement_.position(id);
  return std::hypot(p.x, p.y);
}

NodeId CrossNetwork::diamond_root() const {
  if (auto l = last_of(Segment::II)) return *l;
  return source();
}

std::vector<NodeId> CrossNetwork::special_nodes() const {
  std::vector<NodeId> out;
  if (auto l = last_of(Segment::II)) out.push_back(*l);
  for (Segment s : {Segment::III, Segment::IV, Segment::V}) {
    if (auto f = first_of(s)) out.push_back(*f);
  }
  return out;
}

std::vector<NodeId> CrossNetwork::n_hat() const {
  std::vector<NodeId> out;
  for (NodeId id = 1; id < size(); ++id) {
    if (in_n_hat(id)) out.push_back(id);
  }
  return out;
}

bool CrossNetwork::in_n_hat(NodeId id) const {
  if (id == source()) return false;
  const Segment s = segment_[id];
  const std::size_t r = rank_[id];
  switch (s) {
    case Segment::I: return true;
    case Segment::II: return r + 1 != by_segment_[index_of(s)].size();
    default: return r != 0;
  }
}

Segment classify_segment(const CrossNetwork& network, NodeId node) {
  const Point2& p = network.position(node);
  const double d = network.source_offset();
  if (node == network.source()) throw ValidationError("the source is not on any segment");
  if (p.y == 0.0) {
    if (p.x == 0.0) throw ValidationError("node " + std::to_string(node) + " sits on the intersection");
    if (p.x == -d) throw ValidationError("node " + std::to_string(node) + " sits on the source");
    if (p.x < -d) return Segment::I;
    if (p.x < 0.0) return Segment::II;
    return Segment::III;
  }
  if (p.x != 0.0) throw ValidationError("node " + std::to_string(node) + " is not on either axis");
  return p.y > 0.0 ? Segment::IV : Segment::V;
}

std::optional<NodeId> next_adjacent(const CrossNetwork& network, NodeId node) {
  const auto list = network.segment_nodes(network.segment_of(node));
  const std::size_t r = network.rank_in_segment(node);
  if (r + 1 >= list.size()) return std::nullopt;
  return list[r + 1];
}

double next_gap(const CrossNetwork& network, NodeId node) {
  if (auto next = next_adjacent(network, node)) return network.distance(node, *next);
  return 0.0;
}

CoverageExtents coverage_extents(double h, double range) {
  CoverageExtents c;
  c.same = range;
  c.perp = range > h ? std::sqrt(range * range - h * h) : 0.0;
  c.oppo = std::max(0.0, range - h);
  // sqrt round-off must not break same >= perp >= oppo.
  c.perp = std::clamp(c.perp, c.oppo, c.same);
  return c;
}

CoverageExtents coverage_extents(const CrossNetwork& network, NodeId node, double range) {
  return coverage_extents(network.distance_to_intersection(node), range);
}

std::vector<NodeId> receivers(const Placement& placement, NodeId node, double range) {
  std::vector<NodeId> out;
  if (range <= 0.0) return out;
  for (NodeId u = 0; u < placement.size(); ++u) {
    if (u != node && within_range(placement.distance(node, u), range)) out.push_back(u);
  }
  return out;
}

ReceiverSplit split_receivers(const CrossNetwork& network, NodeId node, double range) {
  ReceiverSplit split;
  const bool is_source = node == network.source();
  for (NodeId u : receivers(network.placement(), node, range)) {
    if (is_source || u == network.source() || network.segment_of(u) != network.segment_of(node)) {
      split.other_segment.push_back(u);
    } else if (network.rank_in_segment(u) > network.rank_in_segment(node)) {
      split.same_segment.push_back(u);
    }
  }
  return split;
}

}  // namespace crossbcast

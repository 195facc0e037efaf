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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "crossbcast/geometry.hpp"

namespace crossbcast {

/// The five pieces of a cross, relative to the source at (-d, 0) and the
/// intersection at the origin. II is the open interval between them.
enum class Segment : std::uint8_t { I = 0, II = 1, III = 2, IV = 3, V = 4 };

inline constexpr std::array<Segment, 5> kSegments = {Segment::I, Segment::II, Segment::III,
                                                     Segment::IV, Segment::V};

std::string_view to_string(Segment s);

inline std::size_t index_of(Segment s) { return static_cast<std::size_t>(s); }

/// Nodes on two perpendicular lines, stored in the canonical frame:
/// intersection at the origin, source at (-d, 0) with d >= 0, Segment IV on
/// the positive y-axis. Node 0 is the source; the remaining nodes keep the
/// order they were given in.
class CrossNetwork {
 public:
  struct Options {
    // Reject inputs whose pairwise distances are not distinct. Hand-built
    // symmetric fixtures turn this off.
    bool require_distinct_distances = true;
  };

  /// Builds a network from points given in any axis-aligned frame whose
  /// intersection is the origin. The frame is rotated by a multiple of 90
  /// degrees so the source lands on the non-positive x-axis.
  static CrossNetwork from_points(Point2 source, std::span<const Point2> others,
                                  double arm_half_length, Options options);
  static CrossNetwork from_points(Point2 source, std::span<const Point2> others,
                                  double arm_half_length = 1.0) {
    return from_points(source, others, arm_half_length, Options{});
  }

  const Placement& placement() const { return placement_; }
  std::size_t size() const { return placement_.size(); }
  NodeId source() const { return 0; }
  const Point2& position(NodeId id) const { return placement_.position(id); }
  double distance(NodeId a, NodeId b) const { return placement_.distance(a, b); }

  double arm_half_length() const { return arm_half_length_; }
  /// d: distance from the source to the intersection.
  double source_offset() const { return -placement_.position(0).x; }
  bool source_at_intersection() const { return source_offset() == 0.0; }

  /// Segment of a non-source node.
  Segment segment_of(NodeId id) const { return segment_[id]; }

  /// Nodes of a segment ordered by increasing distance from the source.
  std::span<const NodeId> segment_nodes(Segment s) const { return by_segment_[index_of(s)]; }
  bool segment_empty(Segment s) const { return by_segment_[index_of(s)].empty(); }
  std::optional<NodeId> first_of(Segment s) const;
  std::optional<NodeId> last_of(Segment s) const;

  /// Position of a non-source node within its segment (0 = first node).
  std::size_t rank_in_segment(NodeId id) const { return rank_[id]; }

  /// Distance from a node to the intersection.
  double distance_to_intersection(NodeId id) const;

  /// l_II, or the source when Segment II is empty.
  NodeId diamond_root() const;

  /// The nodes that may take arbitrary ranges besides the source, in the
  /// order l_II, f_III, f_IV, f_V. l_II is omitted when Segment II is empty
  /// (the source plays its part); first nodes of empty segments are omitted.
  std::vector<NodeId> special_nodes() const;

  /// All nodes except the source and special_nodes(), in id order.
  std::vector<NodeId> n_hat() const;
  bool in_n_hat(NodeId id) const;

 private:
  CrossNetwork() = default;

  Placement placement_;
  double arm_half_length_ = 1.0;
  std::vector<Segment> segment_;  // entry 0 unused
  std::vector<std::size_t> rank_;
  std::array<std::vector<NodeId>, 5> by_segment_;
};

/// Segment label of a non-source node from its canonical coordinates.
Segment classify_segment(const CrossNetwork& network, NodeId node);

/// The first node after `node` on its segment, if any.
std::optional<NodeId> next_adjacent(const CrossNetwork& network, NodeId node);

/// M(node): distance to the next adjacent neighbor, 0 for the last node.
double next_gap(const CrossNetwork& network, NodeId node);

struct CoverageExtents {
  double same = 0.0;  // along the node's own line, away from the intersection
  double perp = 0.0;  // along the perpendicular line, measured from the intersection
  double oppo = 0.0;  // along the node's line beyond the intersection
};

/// Disc coverage of a node at distance `h` from the intersection.
CoverageExtents coverage_extents(double h, double range);
CoverageExtents coverage_extents(const CrossNetwork& network, NodeId node, double range);

/// All nodes other than `node` inside its disc of radius `range`, in id order.
std::vector<NodeId> receivers(const Placement& placement, NodeId node, double range);

struct ReceiverSplit {
  std::vector<NodeId> same_segment;   // after `node` on its own segment
  std::vector<NodeId> other_segment;  // on other segments, plus the source
};

/// receivers() split by segment. Nodes before `node` on its own segment are
/// in neither list. For the source every receiver is "other segment".
ReceiverSplit split_receivers(const CrossNetwork& network, NodeId node, double range);

}  // namespace crossbcast

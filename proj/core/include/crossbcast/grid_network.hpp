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

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/geometry.hpp"

namespace crossbcast {

/// Axis-aligned line-segment. Endpoints are normalised so that `a` has the
/// smaller coordinate along the segment's axis.
struct LineSegment {
  Point2 a;
  Point2 b;

  bool horizontal() const { return a.y == b.y; }
  /// Coordinate along the segment's own axis.
  double along(const Point2& p) const { return horizontal() ? p.x : p.y; }
  double length() const { return horizontal() ? b.x - a.x : b.y - a.y; }
  bool contains(const Point2& p, double tol = 0.0) const;
};

struct GridIntersection {
  Point2 at;
  std::size_t horizontal = 0;  // segment ids
  std::size_t vertical = 0;
};

/// Nodes on a connected arrangement of perpendicular line-segments.
class GridNetwork {
 public:
  /// Validates and builds the network. `node_segment[i]` names the segment
  /// node i lies on; a node on several segments is moved to the lowest id.
  static GridNetwork create(std::vector<LineSegment> segments, std::vector<Point2> nodes,
                            std::vector<std::size_t> node_segment, NodeId source);

  const Placement& placement() const { return placement_; }
  std::size_t size() const { return placement_.size(); }
  NodeId source() const { return placement_.source(); }
  const Point2& position(NodeId id) const { return placement_.position(id); }

  std::span<const LineSegment> segments() const { return segments_; }
  std::span<const GridIntersection> intersections() const { return intersections_; }
  std::size_t segment_of(NodeId id) const { return node_segment_[id]; }
  /// Nodes of a segment (source included) sorted along its axis.
  std::span<const NodeId> segment_nodes(std::size_t seg) const { return by_segment_[seg]; }

 private:
  GridNetwork() = default;

  Placement placement_;
  std::vector<LineSegment> segments_;
  std::vector<GridIntersection> intersections_;
  std::vector<std::size_t> node_segment_;
  std::vector<std::vector<NodeId>> by_segment_;
};

/// The diamond built around one intersection: the nearest node on each of
/// its (up to four) arms, with the MST rooted where data arrives.
struct LocalDiamond {
  std::size_t intersection = 0;
  std::vector<NodeId> vertices;
  NodeId root = 0;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;  // (parent, child)
};

struct GridDistributedPlan {
  RangeAssignment assignment;
  std::vector<double> chain_obligation;  // distance to the next node down the chain (source: farthest first node it feeds)
  std::vector<LocalDiamond> diamonds;
  std::vector<std::size_t> bfs_order;    // intersection ids in arrival order
};

/// Distributed rule run at every intersection. Data leaves the source both
/// ways along its segment; intersections are rooted in breadth-first order
/// from there; every stretch of a segment between junctions is chained away
/// from whichever end receives data first.
GridDistributedPlan grid_distributed_plan(const GridNetwork& grid, double alpha = kDefaultAlpha);
RangeAssignment grid_distributed_assignment(const GridNetwork& grid,
                                            double alpha = kDefaultAlpha);

/// k x k square grid of (k+1) horizontal and (k+1) vertical full-side lines
/// with `nodes` nodes uniform over total length, at least one per line.
GridNetwork generate_square_grid(int k, double side, std::size_t nodes, std::uint64_t seed);

/// A cross network as a two-segment grid (one segment if nothing is off
/// the x-axis), node ids preserved.
GridNetwork cross_as_grid(const CrossNetwork& network);

}  // namespace crossbcast

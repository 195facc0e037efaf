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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace crossbcast {

using NodeId = std::size_t;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline double distance(const Point2& a, const Point2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Round-off allowance for disc coverage. Ranges are built from exact
// pairwise distances, so this never changes which nodes a range covers on
// instances with distinct distances.
inline constexpr double kCoverageRelTol = 1e-12;
inline constexpr double kCoverageAbsTol = 1e-12;

/// True when a node at distance `d` lies inside a disc of radius `range`.
inline bool within_range(double d, double range) {
  return d <= range * (1.0 + kCoverageRelTol) + kCoverageAbsTol;
}

/// Same tolerance, used when comparing two ranges for equality.
inline bool nearly_equal(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= scale * kCoverageRelTol + kCoverageAbsTol;
}

/// r^alpha, with the common alpha == 2 case kept exact.
inline double power_of(double r, double alpha) {
  if (alpha == 2.0) return r * r;
  return std::pow(r, alpha);
}

/// A fixed set of node positions with a designated source and a cached
/// pairwise distance matrix. Shared by cross and grid networks; immutable.
class Placement {
 public:
  Placement() = default;
  Placement(std::vector<Point2> points, NodeId source);

  std::size_t size() const { return points_.size(); }
  NodeId source() const { return source_; }
  const Point2& position(NodeId id) const { return points_[id]; }
  std::span<const Point2> points() const { return points_; }

  double distance(NodeId a, NodeId b) const { return dist_[a * points_.size() + b]; }

  /// Smallest gap between any two distinct pairwise distances (and the
  /// smallest distance itself). Used for the distinct-distance check.
  double min_distance_gap() const;

 private:
  std::vector<Point2> points_;
  NodeId source_ = 0;
  std::vector<double> dist_;
};

// Pairwise distances closer than this are treated as tied.
inline constexpr double kDistinctDistanceTol = 1e-9;

}  // namespace crossbcast

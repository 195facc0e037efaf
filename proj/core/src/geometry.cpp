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

#include "crossbcast/geometry.hpp"

#include <algorithm>
#include <limits>

#include "crossbcast/errors.hpp"

namespace crossbcast {

Placement::Placement(std::vector<Point2> points, NodeId source)
    : points_(std::move(points)), source_(source) {
  if (points_.empty()) throw ValidationError("placement has no nodes");
  if (source_ >= points_.size()) throw ValidationError("source id out of range");
  for (const Point2& p : points_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw ValidationError("node coordinates must be finite");
    }
  }
  const std::size_t n = points_.size();
  dist_.assign(n * n, 0.0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double d = crossbcast::distance(points_[a], points_[b]);
      dist_[a * n + b] = d;
      dist_[b * n + a] = d;
    }
  }
}

double Placement::min_distance_gap() const {
  const std::size_t n = points_.size();
  if (n < 2) return std::numeric_limits<double>::infinity();
  std::vector<double> all;
  all.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) all.push_back(distance(a, b));
  }
  std::sort(all.begin(), all.end());
  double gap = all.front();
  for (std::size_t i = 1; i < all.size(); ++i) gap = std::min(gap, all[i] - all[i - 1]);
  return gap;
}

}  // namespace crossbcast

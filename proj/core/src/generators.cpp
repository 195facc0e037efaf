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

#include "crossbcast/generators.hpp"

#include <algorithm>
#include <vector>

#include "crossbcast/errors.hpp"

namespace crossbcast {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
  return splitmix64(splitmix64(master) ^ (trial * 0xd1b54a32d192ed03ULL));
}

std::string_view to_string(SourceMode mode) {
  return mode == SourceMode::kIntersection ? "intersection" : "uniform";
}

namespace {

Point2 point_on_cross(std::mt19937_64& rng, double arm) {
  while (true) {
    const double u = unit_uniform(rng) * 4.0;
    const int which = std::min(3, static_cast<int>(u));
    const double offset = (u - which) * arm;
    if (offset <= 0.0) continue;  // the intersection itself
    switch (which) {
      case 0: return {offset, 0.0};
      case 1: return {0.0, offset};
      case 2: return {-offset, 0.0};
      default: return {0.0, -offset};
    }
  }
}

}  // namespace

CrossNetwork generate_random_cross(std::size_t n, std::uint64_t seed, double arm_half_length,
                                   SourceMode mode) {
  if (n < 2) throw ValidationError("a cross network needs at least two nodes");
  if (!(arm_half_length > 0.0)) throw ValidationError("arm_half_length must be positive");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const Point2 source =
        mode == SourceMode::kIntersection ? Point2{} : point_on_cross(rng, arm_half_length);
    std::vector<Point2> others(n - 1);
    for (Point2& p : others) p = point_on_cross(rng, arm_half_length);
    try {
      return CrossNetwork::from_points(source, others, arm_half_length);
    } catch (const ValidationError&) {
      // Coincident points or tied distances: measure zero, draw again.
    }
  }
  throw ValidationError("could not draw a cross network with distinct distances");
}

}  // namespace crossbcast

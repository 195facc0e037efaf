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
#include <random>
#include <string_view>

#include "crossbcast/cross_network.hpp"

namespace crossbcast {

std::uint64_t splitmix64(std::uint64_t x);

/// Seed of trial `trial` under `master`. Depends only on the pair, so trials
/// can run in any order or in parallel.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double unit_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

enum class SourceMode { kIntersection, kUniform };

std::string_view to_string(SourceMode mode);

/// N nodes uniform over a cross with four arms of length `arm_half_length`.
/// In uniform mode the source is placed like any other node and the frame is
/// then turned so it sits on the negative x-axis.
CrossNetwork generate_random_cross(std::size_t n, std::uint64_t seed,
                                   double arm_half_length = 1.0,
                                   SourceMode mode = SourceMode::kUniform);

}  // namespace crossbcast

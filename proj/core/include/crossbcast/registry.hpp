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
#include <string>
#include <string_view>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/grid_network.hpp"
#include "crossbcast/planners.hpp"

namespace crossbcast {

struct PlannerOptions {
  double alpha = kDefaultAlpha;
  OptimalSearchOptions search;
  BruteForceOptions brute;
};

struct PlanReport {
  std::string algo;
  double cost = 0.0;
  double runtime_seconds = 0.0;
  std::uint64_t iterations = 0;  // only the optimal search counts these
  bool delivered = false;
};

struct Plan {
  RangeAssignment assignment;
  PlanReport report;
};

/// "optimal", "optimal-intersection", "brute", "near-optimal", "distributed",
/// "mst", "bip", "bip-sweep".
std::span<const std::string_view> cross_planner_names();

/// "grid-distributed" (alias "distributed"), "mst", "bip", "bip-sweep", "brute".
std::span<const std::string_view> grid_planner_names();

bool is_cross_planner(std::string_view name);
bool is_grid_planner(std::string_view name);

/// Runs a planner by name and checks delivery of its output. Unknown names
/// throw ValidationError.
Plan run_planner(std::string_view name, const CrossNetwork& network,
                 const PlannerOptions& options = {});
Plan run_planner(std::string_view name, const GridNetwork& grid,
                 const PlannerOptions& options = {});

}  // namespace crossbcast

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

#include "crossbcast/registry.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <string>

#include "crossbcast/errors.hpp"

namespace crossbcast {
namespace {

constexpr std::array<std::string_view, 8> kCross = {
    "optimal", "optimal-intersection", "brute", "near-optimal",
    "distributed", "mst", "bip", "bip-sweep"};
constexpr std::array<std::string_view, 6> kGrid = {
    "grid-distributed", "distributed", "mst", "bip", "bip-sweep", "brute"};

template <typename F>
Plan timed(std::string_view name, const Placement& placement, F&& plan) {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t iterations = 0;
  RangeAssignment a = plan(iterations);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  PlanReport report{std::string(name), cost(a), took.count(), iterations,
                    reaches_all(placement, a.ranges())};
  return {std::move(a), std::move(report)};
}

[[noreturn]] void unknown(std::string_view name, std::string_view kind) {
  throw ValidationError("unknown " + std::string(kind) + " planner '" + std::string(name) + "'");
}

}  // namespace

std::span<const std::string_view> cross_planner_names() { return kCross; }
std::span<const std::string_view> grid_planner_names() { return kGrid; }

bool is_cross_planner(std::string_view name) {
  return std::find(kCross.begin(), kCross.end(), name) != kCross.end();
}
bool is_grid_planner(std::string_view name) {
  return std::find(kGrid.begin(), kGrid.end(), name) != kGrid.end();
}

Plan run_planner(std::string_view name, const CrossNetwork& network,
                 const PlannerOptions& options) {
  const double alpha = options.alpha;
  return timed(name, network.placement(), [&](std::uint64_t& iterations) -> RangeAssignment {
    if (name == "optimal" || name == "optimal-intersection") {
      const SearchMode mode =
          name == "optimal" ? SearchMode::kGeneral : SearchMode::kSourceAtIntersection;
      OptimalSearchResult r = optimal_search(network, alpha, mode, options.search);
      iterations = r.iterations;
      return std::move(r.assignment);
    }
    if (name == "brute") return brute_force_oracle(network, alpha, options.brute);
    if (name == "near-optimal") return near_optimal_assignment(network, alpha);
    if (name == "distributed") return distributed_assignment(network, alpha);
    if (name == "mst") return mst_assignment(network, alpha);
    if (name == "bip") return bip_assignment(network, alpha);
    if (name == "bip-sweep") return sweep(network, bip_assignment(network, alpha));
    unknown(name, "cross");
  });
}

Plan run_planner(std::string_view name, const GridNetwork& grid, const PlannerOptions& options) {
  const double alpha = options.alpha;
  const Placement& p = grid.placement();
  return timed(name, p, [&](std::uint64_t&) -> RangeAssignment {
    if (name == "grid-distributed" || name == "distributed") {
      return grid_distributed_assignment(grid, alpha);
    }
    if (name == "brute") return brute_force_oracle(p, alpha, options.brute);
    if (name == "mst") return mst_assignment(p, alpha);
    if (name == "bip") return bip_assignment(p, alpha);
    if (name == "bip-sweep") return sweep(p, bip_assignment(p, alpha));
    unknown(name, "grid");
  });
}

}  // namespace crossbcast

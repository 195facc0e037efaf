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


#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "crossbcast/assignment.hpp"
#include "crossbcast/errors.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/grid_network.hpp"
#include "crossbcast/io.hpp"
#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

TEST(Grid, SingleCrossMatchesCrossRule) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto net = generate_random_cross(2 + seed % 45, seed, 1.0,
                                           seed % 3 ? SourceMode::kUniform : SourceMode::kIntersection);
    const auto grid = cross_as_grid(net);
    EXPECT_EQ(grid_distributed_assignment(grid), distributed_assignment(net)) << seed;
  }
}

TEST(Grid, SourceOnTheIntersection) {
  const std::vector<Point2> nodes = {{-0.7, 0}, {1.1, 0}, {0, 0.9}, {0, -1.3}, {-1.5, 0}};
  const auto net = CrossNetwork::from_points({0, 0}, nodes, 2.0);
  EXPECT_EQ(grid_distributed_assignment(cross_as_grid(net)), distributed_assignment(net));
}

TEST(Grid, SquareGridsDeliver) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    const std::size_t segs = 2 * static_cast<std::size_t>(k + 1);
    const auto grid = generate_square_grid(k, 1.0, segs + seed % 50, seed);
    const auto r = grid_distributed_assignment(grid);
    ASSERT_TRUE(reaches_all(grid.placement(), r.ranges())) << seed;
  }
}

TEST(Grid, LShape) {
  const std::vector<LineSegment> segs = {{{0, 0}, {3, 0}}, {{3, 0}, {3, 3}}};
  const std::vector<Point2> nodes = {{1, 0}, {2.2, 0}, {3, 1.1}, {3, 2.5}, {0.2, 0}};
  const auto grid = GridNetwork::create(segs, nodes, {0, 0, 1, 1, 0}, 0);
  EXPECT_EQ(grid.intersections().size(), 1u);
  const auto r = grid_distributed_assignment(grid);
  EXPECT_TRUE(reaches_all(grid.placement(), r.ranges()));
}

TEST(Grid, RangesStayLocal) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto grid = generate_square_grid(2, 1.0, 6 + seed % 60, seed);
    const auto plan = grid_distributed_plan(grid);
    std::vector<double> bound = plan.chain_obligation;
    for (const auto& d : plan.diamonds) {
      for (auto [p, c] : d.tree_edges) {
        const double w = grid.placement().distance(p, c);
        bound[p] = std::max(bound[p], w);
      }
    }
    for (NodeId v = 0; v < grid.size(); ++v) {
      ASSERT_LE(plan.assignment[v], bound[v] + 1e-12) << seed << " node " << v;
    }
  }
}

TEST(Grid, OneCellLayout) {
  const auto grid = generate_square_grid(1, 1.0, 6, 3);
  EXPECT_EQ(grid.segments().size(), 4u);
  EXPECT_EQ(grid.intersections().size(), 4u);
  EXPECT_EQ(grid.size(), 6u);
}

TEST(Grid, GeneratorIsReproducible) {
  const auto a = generate_square_grid(2, 1.0, 12, 1);
  const auto b = generate_square_grid(2, 1.0, 12, 1);
  EXPECT_EQ(a.size(), 12u);
  EXPECT_EQ(a.segments().size(), 6u);
  EXPECT_EQ(a.intersections().size(), 9u);
  for (std::size_t s = 0; s < a.segments().size(); ++s) EXPECT_FALSE(a.segment_nodes(s).empty());
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_NE(to_json(a), to_json(generate_square_grid(2, 1.0, 12, 2)));
}

TEST(Grid, GeneratorRejects) {
  EXPECT_THROW(generate_square_grid(2, 1.0, 5, 1), InfeasibleN);
  EXPECT_THROW(generate_square_grid(0, 1.0, 5, 1), ValidationError);
  EXPECT_THROW(generate_square_grid(1, -1.0, 5, 1), ValidationError);
}

TEST(Grid, ValidationErrors) {
  const std::vector<LineSegment> cross = {{{-1, 0}, {1, 0}}, {{0, -1}, {0, 1}}};
  EXPECT_THROW(GridNetwork::create(cross, {{0.5, 0}, {-0.5, 0}}, {0, 0}, 0), EmptySegment);
  const std::vector<LineSegment> parallel = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
  EXPECT_THROW(GridNetwork::create(parallel, {{0.5, 0}, {0.5, 1}}, {0, 1}, 0), DisconnectedGrid);
  const std::vector<LineSegment> overlap = {{{0, 0}, {2, 0}}, {{1, 0}, {3, 0}}};
  EXPECT_THROW(GridNetwork::create(overlap, {{0.5, 0}, {2.5, 0}}, {0, 1}, 0), ValidationError);
  EXPECT_THROW(GridNetwork::create(cross, {{0.5, 0}, {0, 2}}, {0, 1}, 0), ValidationError);
  EXPECT_THROW(GridNetwork::create(cross, {{0.5, 0}, {0.5, 0}, {0, 0.5}}, {0, 0, 1}, 0),
               ValidationError);
  const std::vector<LineSegment> diagonal = {{{0, 0}, {1, 1}}};
  EXPECT_THROW(GridNetwork::create(diagonal, {{0.5, 0.5}}, {0}, 0), ValidationError);
}

TEST(Grid, JsonRoundTrip) {
  const auto grid = generate_square_grid(2, 1.0, 25, 8);
  const std::string text = to_json(grid);
  const auto back = grid_from_json(text);
  EXPECT_EQ(to_json(back), text);
  EXPECT_EQ(grid_distributed_assignment(back), grid_distributed_assignment(grid));
  EXPECT_EQ(detect_network_kind(text), NetworkKind::kGrid);
}

TEST(Grid, BaselinesRunOnGrids) {
  const auto grid = generate_square_grid(2, 1.0, 30, 4);
  const auto bip = bip_assignment(grid.placement());
  const auto swept = sweep(grid.placement(), bip);
  EXPECT_TRUE(reaches_all(grid.placement(), swept.ranges()));
  EXPECT_LE(cost(swept), cost(bip) + 1e-12);
}

}  // namespace
}  // namespace crossbcast

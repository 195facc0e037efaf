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

#include <cmath>
#include <vector>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/errors.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/planners.hpp"
#include "crossbcast/registry.hpp"
#include "oracles.hpp"

namespace crossbcast {
namespace {

std::vector<Point2> points_of(const Placement& p) { return {p.points().begin(), p.points().end()}; }

void expect_same_ranges(const RangeAssignment& a, const RangeAssignment& b) {
  ASSERT_EQ(a.size(), b.size());
  for (NodeId i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]) << "node " << i;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// The five-node example with n1, n3, n4 and n5 nudged so every pairwise
// distance differs.
CrossNetwork perturbed_five() {
  const std::vector<Point2> nodes = {{-3.1, 0}, {-1, 0}, {1.2, 0}, {0, 2.01}, {0, -0.9}};
  return CrossNetwork::from_points({-2, 0}, nodes, 5.0);
}

// ---------------------------------------------------------------- optimal

TEST(Optimal, HopByHopOnOneHalfLine) {
  const auto net = CrossNetwork::from_points({-0.5, 0}, std::vector<Point2>{{-1.5, 0}, {-2.5, 0}},
                                             3.0, CrossNetwork::Options{false});
  const auto r = optimal_assignment(net);
  EXPECT_NEAR(cost(r), 2.0, 1e-12);
  EXPECT_NEAR(r[0], 1.0, 1e-12);
  EXPECT_NEAR(r[1], 1.0, 1e-12);
}

TEST(Optimal, SymmetricFourArms) {
  const std::vector<Point2> arms = {{-1, 0}, {1, 0}, {0, 1}, {0, -1}};
  const auto net = CrossNetwork::from_points({0, 0}, arms, 2.0, CrossNetwork::Options{false});
  for (const auto& r : {optimal_assignment(net), optimal_assignment_source_at_intersection(net)}) {
    EXPECT_NEAR(cost(r), 1.0, 1e-12);
    EXPECT_NEAR(r[0], 1.0, 1e-12);
    for (NodeId v = 1; v < 5; ++v) EXPECT_EQ(r[v], 0.0);
  }
}

TEST(Optimal, SevenNodesMatchOracles) {
  const auto net = generate_random_cross(7, 42);
  const double opt = cost(optimal_assignment(net));
  EXPECT_LE(rel(opt, cost(brute_force_oracle(net))), 1e-9);
  EXPECT_LE(rel(opt, oracle::exhaustive_min_cost(points_of(net.placement()), 0, 2.0)), 1e-9);
}

TEST(Optimal, IntersectionModeMatchesBruteAndGeneral) {
  const auto net = generate_random_cross(8, 7, 1.0, SourceMode::kIntersection);
  ASSERT_TRUE(net.source_at_intersection());
  OptimalSearchOptions pruned;
  pruned.prune = true;
  const double fast = cost(optimal_assignment_source_at_intersection(net));
  EXPECT_LE(rel(fast, cost(brute_force_oracle(net))), 1e-9);
  EXPECT_LE(rel(fast, cost(optimal_assignment(net, 2.0, pruned))), 1e-9);
}

TEST(Optimal, IntersectionModeNeedsIntersectionSource) {
  EXPECT_THROW(optimal_assignment_source_at_intersection(generate_random_cross(6, 3)),
               SourceNotAtIntersection);
}

TEST(Optimal, PruningDoesNotChangeResult) {
  OptimalSearchOptions pruned;
  pruned.prune = true;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    const auto net = generate_random_cross(6 + seed % 2, seed);
    expect_same_ranges(optimal_assignment(net), optimal_assignment(net, 2.0, pruned));
  }
}

TEST(Optimal, ThreadsDoNotChangeResult) {
  OptimalSearchOptions threaded;
  threaded.threads = 3;
  const auto net = generate_random_cross(7, 19);
  expect_same_ranges(optimal_assignment(net), optimal_assignment(net, 2.0, threaded));
}

TEST(Optimal, BudgetCheckpointResumes) {
  const auto net = generate_random_cross(7, 23);
  OptimalSearchOptions tight;
  tight.budget = 2000;
  SearchCheckpoint cp;
  try {
    (void)optimal_assignment(net, 2.0, tight);
    FAIL() << "expected BudgetExceeded";
  } catch (const BudgetExceeded& e) {
    cp = e.checkpoint();
  }
  EXPECT_GE(cp.iterations, tight.budget);
  OptimalSearchOptions resumed;
  resumed.resume = cp;
  expect_same_ranges(optimal_assignment(net, 2.0, resumed), optimal_assignment(net));
}

TEST(Optimal, TinyNetworks) {
  const auto one = CrossNetwork::from_points({-1, 0}, std::vector<Point2>{});
  EXPECT_EQ(cost(optimal_assignment(one)), 0.0);
  const auto two = CrossNetwork::from_points({-1, 0}, std::vector<Point2>{{0, 0.6}});
  EXPECT_NEAR(optimal_assignment(two)[0], std::hypot(1.0, 0.6), 1e-15);
}

TEST(Optimal, AlphaThree) {
  const auto net = generate_random_cross(6, 31);
  EXPECT_LE(rel(cost(optimal_assignment(net, 3.0)), cost(brute_force_oracle(net, 3.0))), 1e-9);
}

// ------------------------------------------------------------------ brute

TEST(Brute, TwoNodes) {
  const auto r = brute_force_oracle(Placement({{0, 0}, {1.7, 0}}, 0));
  EXPECT_EQ(r[0], 1.7);
  EXPECT_NEAR(cost(r), 2.89, 1e-12);
}

TEST(Brute, LineRelays) {
  EXPECT_NEAR(cost(brute_force_oracle(Placement({{0, 0}, {1, 0}, {2, 0}}, 0))), 2.0, 1e-12);
}

TEST(Brute, CapIsEnforced) {
  EXPECT_THROW(brute_force_oracle(generate_random_cross(9, 1)), TooLarge);
  BruteForceOptions lower;
  lower.max_nodes = 5;
  EXPECT_THROW(brute_force_oracle(generate_random_cross(6, 1), 2.0, lower), TooLarge);
}

TEST(Brute, MatchesPlainOdometer) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto net = generate_random_cross(3 + seed % 4, seed);
    const auto r = brute_force_oracle(net);
    EXPECT_TRUE(reaches_all(net, r));
    EXPECT_LE(rel(cost(r), oracle::exhaustive_min_cost(points_of(net.placement()), 0, 2.0)), 1e-12)
        << seed;
  }
}

TEST(Brute, BoundsEveryHeuristic) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto net = generate_random_cross(7, seed, 1.0,
                                           seed % 3 ? SourceMode::kUniform : SourceMode::kIntersection);
    const double b = cost(brute_force_oracle(net));
    for (const auto& r : {near_optimal_assignment(net), distributed_assignment(net),
                          mst_assignment(net), bip_assignment(net), sweep(net, bip_assignment(net))}) {
      EXPECT_LE(b, cost(r) + 1e-9) << seed;
    }
  }
}

// ----------------------------------------------------------- near-optimal

TEST(NearOptimal, SingleHalfLineIsAChain) {
  const std::vector<Point2> nodes = {{-1.2, 0}, {-2.6, 0}, {-3.1, 0}};
  const auto net = CrossNetwork::from_points({-0.5, 0}, nodes, 4.0);
  const auto r = near_optimal_assignment(net);
  EXPECT_NEAR(r[0], 0.7, 1e-12);
  EXPECT_NEAR(r[1], 1.4, 1e-12);
  EXPECT_NEAR(r[2], 0.5, 1e-12);
  EXPECT_EQ(r[3], 0.0);
  EXPECT_NEAR(cost(r), 0.49 + 1.96 + 0.25, 1e-12);
}

TEST(NearOptimal, FiveNodeExample) {
  const auto net = perturbed_five();
  const auto r = near_optimal_assignment(net);
  EXPECT_TRUE(reaches_all(net, r));
  EXPECT_LE(cost(r), cost(distributed_assignment(net)) + 1e-12);
  EXPECT_GE(cost(r), oracle::exhaustive_min_cost(points_of(net.placement()), 0, 2.0) - 1e-12);
}

TEST(NearOptimal, NeverBelowOptimum) {
  const auto net = generate_random_cross(7, 42);
  EXPECT_GE(cost(near_optimal_assignment(net)), cost(brute_force_oracle(net)) - 1e-12);
}

TEST(NearOptimal, DeliversAcrossSizes) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto net = generate_random_cross(2 + seed % 50, seed, 1.0,
                                           seed % 2 ? SourceMode::kUniform : SourceMode::kIntersection);
    ASSERT_TRUE(reaches_all(net, near_optimal_assignment(net))) << seed;
  }
}

// ------------------------------------------------------------ distributed

TEST(Distributed, FiveNodeExample) {
  const auto net = perturbed_five();
  // Diamond {n2, n3, n4, n5} rooted at n2, by spanning-tree enumeration.
  const std::vector<NodeId> diamond = {2, 3, 4, 5};
  std::vector<Point2> pts;
  for (NodeId v : diamond) pts.push_back(net.position(v));
  const auto child = oracle::enumerated_mst_child_max(pts, 0);
  std::vector<double> expect(6, 0.0);
  expect[0] = std::max(net.distance(0, 1), net.distance(0, 2));
  for (std::size_t i = 0; i < diamond.size(); ++i) expect[diamond[i]] = child[i];

  const auto r = distributed_assignment(net);
  for (NodeId v = 0; v < 6; ++v) EXPECT_NEAR(r[v], expect[v], 1e-12) << v;
  // Edges n2-n5, n5-n3, n2-n4.
  EXPECT_NEAR(r[0], 1.1, 1e-12);
  EXPECT_NEAR(r[2], std::sqrt(5.0401), 1e-12);
  EXPECT_NEAR(r[5], 1.5, 1e-12);
  EXPECT_NEAR(cost(r), 1.21 + 5.0401 + 2.25, 1e-12);
  expect_same_ranges(r, mst_assignment(net));
}

TEST(Distributed, SourceAtIntersection) {
  const std::vector<Point2> nodes = {{-0.7, 0}, {1.1, 0}, {0, 0.9}, {0, -1.3}, {-1.5, 0}, {0, 1.65}};
  const auto net = CrossNetwork::from_points({0, 0}, nodes, 2.0);
  const auto child = oracle::enumerated_mst_child_max(points_of(net.placement()), 0);
  const auto r = distributed_assignment(net);
  for (NodeId v = 0; v < net.size(); ++v) EXPECT_NEAR(r[v], child[v], 1e-12) << v;
  EXPECT_NEAR(r[0], 1.3, 1e-12);
}

TEST(Distributed, MatchesEnumeratedMst) {
  for (std::uint64_t seed = 1; seed <= 12; ++seed) {
    const auto net = generate_random_cross(4 + seed % 4, seed);
    const auto child = oracle::enumerated_mst_child_max(points_of(net.placement()), 0);
    const auto r = distributed_assignment(net);
    for (NodeId v = 0; v < net.size(); ++v) EXPECT_NEAR(r[v], child[v], 1e-12) << seed;
  }
}

TEST(Distributed, EqualsMstNodeForNode) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const auto net = generate_random_cross(5 + seed % 56, seed, 1.0,
                                           seed % 4 ? SourceMode::kUniform : SourceMode::kIntersection);
    expect_same_ranges(distributed_assignment(net), mst_assignment(net));
  }
}

TEST(Distributed, EmptySegmentI) {
  const auto net = CrossNetwork::from_points({-0.5, 0}, std::vector<Point2>{{-0.2, 0}, {0.4, 0}, {0, 0.3}});
  expect_same_ranges(distributed_assignment(net), mst_assignment(net));
  EXPECT_NEAR(distributed_assignment(net)[0], 0.3, 1e-12);
}

// --------------------------------------------------------------- baselines

TEST(Mst, Examples) {
  EXPECT_EQ(mst_assignment(Placement({{0, 0}, {0.8, 0}}, 0))[0], 0.8);
  const auto chain = mst_assignment(Placement({{0, 0}, {1, 0}, {2.5, 0}, {2.7, 0}}, 0));
  EXPECT_NEAR(chain[0], 1.0, 1e-12);
  EXPECT_NEAR(chain[1], 1.5, 1e-12);
  EXPECT_NEAR(chain[2], 0.2, 1e-12);
  EXPECT_EQ(chain[3], 0.0);
  EXPECT_THROW(mst_assignment(Placement({{0, 0}, {1, 0}, {-1, 0}}, 0)), TiedWeights);
}

TEST(Bip, Examples) {
  const auto line = bip_assignment(Placement({{0, 0}, {1, 0}, {2, 0}}, 0));
  EXPECT_EQ(line[0], 1.0);
  EXPECT_EQ(line[1], 1.0);
  EXPECT_EQ(line[2], 0.0);
  EXPECT_NEAR(cost(line), 2.0, 1e-12);
  EXPECT_EQ(bip_assignment(Placement({{0, 0}, {1.3, 0}}, 0))[0], 1.3);
}

TEST(Bip, UsesMulticastAdvantage) {
  // Raising the source from 1 to 2 costs 3 extra; relaying through (1,0) costs 9.
  const auto r = bip_assignment(Placement({{0, 0}, {1, 0}, {-2, 0}}, 0));
  EXPECT_EQ(r[0], 2.0);
  EXPECT_EQ(r[1], 0.0);
}

TEST(Sweep, Examples) {
  const Placement p({{0, 0}, {1, 0}, {2.5, 0}}, 0);
  const RangeAssignment chain({1.0, 1.5, 0.0});
  EXPECT_EQ(sweep(p, chain), chain);
  const RangeAssignment star({2.5, 1.5, 0.0});
  EXPECT_EQ(sweep(p, star), RangeAssignment({2.5, 0.0, 0.0}));
  EXPECT_THROW(sweep(p, RangeAssignment({1.0, 0.0, 0.0})), InfeasibleInput);
}

TEST(Sweep, NeverWorseThanBip) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto net = generate_random_cross(5 + seed % 40, seed);
    const auto b = bip_assignment(net);
    const auto s = sweep(net, b);
    ASSERT_TRUE(reaches_all(net, b));
    ASSERT_TRUE(reaches_all(net, s));
    ASSERT_LE(cost(s), cost(b) + 1e-12);
    for (NodeId v = 0; v < net.size(); ++v) ASSERT_TRUE(s[v] == 0.0 || s[v] == b[v]);
  }
}

TEST(Trees, ForestGrowsFromEveryRoot) {
  const Placement p({{0, 0}, {0.3, 0}, {5, 0}, {5.4, 0}, {2.4, 0}}, 0);
  const std::vector<NodeId> vertices = {0, 1, 2, 3, 4};
  const std::vector<NodeId> roots = {0, 2};
  const auto edges = rooted_forest_edges(p, vertices, roots);
  ASSERT_EQ(edges.size(), 3u);
  for (auto [parent, child] : edges) {
    if (child == 1) EXPECT_EQ(parent, 0u);
    if (child == 3) EXPECT_EQ(parent, 2u);
    if (child == 4) EXPECT_EQ(parent, 1u);
  }
}

// ---------------------------------------------------------------- registry

TEST(Registry, EveryCrossPlannerDelivers) {
  const auto general = generate_random_cross(7, 2);
  const auto centred = generate_random_cross(7, 2, 1.0, SourceMode::kIntersection);
  for (std::string_view name : cross_planner_names()) {
    const auto& net = name == "optimal-intersection" ? centred : general;
    const Plan plan = run_planner(name, net);
    EXPECT_TRUE(plan.report.delivered) << name;
    EXPECT_EQ(plan.report.algo, name);
    EXPECT_NEAR(plan.report.cost, cost(plan.assignment), 1e-15);
  }
  EXPECT_THROW(run_planner("greedy", general), ValidationError);
  EXPECT_TRUE(is_cross_planner("bip-sweep"));
  EXPECT_FALSE(is_cross_planner("grid-distributed"));
}

}  // namespace
}  // namespace crossbcast

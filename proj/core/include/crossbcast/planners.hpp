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
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/errors.hpp"
#include "crossbcast/geometry.hpp"

namespace crossbcast {

// ---------------------------------------------------------------------------
// Trees

/// (parent, child) edges of the minimum spanning tree over `vertices`, grown
/// from `root` by Prim's rule. Ties go to the smaller node id. Edges are
/// listed in the order they were added.
std::vector<std::pair<NodeId, NodeId>> rooted_mst_edges(const Placement& placement,
                                                        std::span<const NodeId> vertices,
                                                        NodeId root);

/// The complete graph on {l_II, f_III, f_IV, f_V} (the source standing in
/// for l_II when Segment II is empty; missing first nodes dropped) together
/// with its MST rooted at the vertex through which data enters.
/// Prim's rule started from several roots at once: every non-root vertex
/// hangs below the root set through the cheapest edges. With one root this
/// is the rooted MST.
std::vector<std::pair<NodeId, NodeId>> rooted_forest_edges(const Placement& placement,
                                                           std::span<const NodeId> vertices,
                                                           std::span<const NodeId> roots);

struct DiamondGraph {
  std::vector<NodeId> vertices;  // root first
  NodeId root = 0;
  std::vector<std::pair<NodeId, NodeId>> tree_edges;  // (parent, child)
};

DiamondGraph diamond_graph(const CrossNetwork& network);

// ---------------------------------------------------------------------------
// Exact search over the restricted assignment family

inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000'000ULL;
inline constexpr std::size_t kMaxSearchNodes = 40;

/// Where an interrupted optimal search stopped. Feed it back through
/// OptimalSearchOptions::resume to continue.
struct SearchCheckpoint {
  std::uint64_t next_index = 0;  // linear index over (t, c) pairs
  std::uint64_t iterations = 0;  // work already spent
  bool has_incumbent = false;
  double incumbent_cost = 0.0;
  std::uint64_t incumbent_index = 0;
  std::vector<double> incumbent_ranges;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, SearchCheckpoint checkpoint)
      : Error(what), checkpoint_(std::move(checkpoint)) {}
  const SearchCheckpoint& checkpoint() const { return checkpoint_; }

 private:
  SearchCheckpoint checkpoint_;
};

enum class SearchMode {
  kGeneral,               // source anywhere: eight free nodes, c-tuples of length 8
  kSourceAtIntersection,  // source plus three free nodes, c-tuples of length 4
};

struct SearchProgress {
  std::uint64_t done = 0;   // (t, c) pairs finished
  std::uint64_t total = 0;  // |T| * |C|
  std::uint64_t iterations = 0;
  double incumbent_cost = 0.0;  // +inf until something delivers
};

struct OptimalSearchOptions {
  std::uint64_t budget = kDefaultSearchBudget;  // node visits
  // Skip c-tuples and permutation prefixes that cannot beat the incumbent or
  // the near-optimal cost. The result is identical with or without it.
  bool prune = false;
  unsigned threads = 1;
  std::optional<SearchCheckpoint> resume;
  std::function<void(const SearchProgress&)> progress;
};

struct OptimalSearchResult {
  RangeAssignment assignment;
  std::uint64_t iterations = 0;  // node visits across all walks
  std::uint64_t tuples = 0;      // (t, c) pairs evaluated
};

OptimalSearchResult optimal_search(const CrossNetwork& network, double alpha, SearchMode mode,
                                   const OptimalSearchOptions& options = {});

/// Minimum-cost assignment delivering to every node. Throws BudgetExceeded.
RangeAssignment optimal_assignment(const CrossNetwork& network, double alpha = kDefaultAlpha,
                                   const OptimalSearchOptions& options = {});

/// Same optimum for a source on the intersection, searching N^4 c-tuples.
/// Throws SourceNotAtIntersection otherwise.
RangeAssignment optimal_assignment_source_at_intersection(
    const CrossNetwork& network, double alpha = kDefaultAlpha,
    const OptimalSearchOptions& options = {});

// ---------------------------------------------------------------------------
// Exhaustive oracle

struct BruteForceOptions {
  std::size_t max_nodes = 8;
};

/// Minimum over every assignment whose ranges are drawn from
/// {0} and the node's distances to the other nodes. Any optimal range can be
/// shrunk to its farthest receiver without losing coverage, so this set
/// contains an optimum. Throws TooLarge above max_nodes.
RangeAssignment brute_force_oracle(const Placement& placement, double alpha = kDefaultAlpha,
                                   BruteForceOptions options = {});
inline RangeAssignment brute_force_oracle(const CrossNetwork& network,
                                          double alpha = kDefaultAlpha,
                                          BruteForceOptions options = {}) {
  return brute_force_oracle(network.placement(), alpha, options);
}

// ---------------------------------------------------------------------------
// Heuristics and baselines

/// Best of the 120 segment orderings under the M-or-zero rule, with the
/// boundary-coverage tagging and first-node rescue steps.
RangeAssignment near_optimal_assignment(const CrossNetwork& network,
                                        double alpha = kDefaultAlpha);

/// Local rule: chain to the next adjacent neighbor, plus the rooted diamond
/// MST around the intersection.
RangeAssignment distributed_assignment(const CrossNetwork& network,
                                       double alpha = kDefaultAlpha);

/// Each node covers its farthest child in the Euclidean MST rooted at the
/// source. Throws TiedWeights when pairwise distances are not distinct.
RangeAssignment mst_assignment(const Placement& placement, double alpha = kDefaultAlpha);
inline RangeAssignment mst_assignment(const CrossNetwork& network,
                                      double alpha = kDefaultAlpha) {
  return mst_assignment(network.placement(), alpha);
}

/// Broadcast incremental power: grow a tree from the source, each step
/// adding the outside node that is cheapest to reach given the powers
/// already paid for. Ties go to (incremental cost, transmitter id, node id).
RangeAssignment bip_assignment(const Placement& placement, double alpha = kDefaultAlpha);
inline RangeAssignment bip_assignment(const CrossNetwork& network,
                                      double alpha = kDefaultAlpha) {
  return bip_assignment(network.placement(), alpha);
}

/// Removes transmissions, largest range first, while delivery still holds;
/// repeats until a full pass changes nothing. Throws InfeasibleInput if the
/// input does not deliver.
RangeAssignment sweep(const Placement& placement, const RangeAssignment& assignment);
inline RangeAssignment sweep(const CrossNetwork& network, const RangeAssignment& assignment) {
  return sweep(network.placement(), assignment);
}

}  // namespace crossbcast

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

#include <optional>
#include <span>
#include <vector>

#include "crossbcast/cross_network.hpp"
#include "crossbcast/geometry.hpp"

namespace crossbcast {

inline constexpr double kDefaultAlpha = 2.0;
inline constexpr double kMinAlpha = 2.0;
inline constexpr double kMaxAlpha = 6.0;

/// Transmission radius per node id plus the path-loss exponent used to
/// price it.
class RangeAssignment {
 public:
  RangeAssignment() = default;
  explicit RangeAssignment(std::vector<double> ranges, double alpha = kDefaultAlpha);

  static RangeAssignment zeros(std::size_t n, double alpha = kDefaultAlpha) {
    return RangeAssignment(std::vector<double>(n, 0.0), alpha);
  }

  double alpha() const { return alpha_; }
  std::size_t size() const { return ranges_.size(); }
  double operator[](NodeId id) const { return ranges_[id]; }
  std::span<const double> ranges() const { return ranges_; }

  void set(NodeId id, double range);

  friend bool operator==(const RangeAssignment&, const RangeAssignment&) = default;

 private:
  std::vector<double> ranges_;
  double alpha_ = kDefaultAlpha;
};

/// Total energy: sum of R(k)^alpha.
double cost(const RangeAssignment& assignment);
double cost(std::span<const double> ranges, double alpha);

struct BroadcastOutcome {
  std::vector<char> reached;                 // per node
  std::vector<std::optional<NodeId>> parent;  // transmitter that first covered it
  std::size_t reached_count = 0;
  std::size_t rounds = 0;  // synchronous waves that reached at least one new node

  bool delivered() const { return reached_count == reached.size(); }
  bool is_reached(NodeId id) const { return reached[id] != 0; }
};

/// Fixpoint of "every reached node transmits at its range". Waves are
/// processed in node-id order so parentage is reproducible.
BroadcastOutcome simulate_broadcast(const Placement& placement, std::span<const double> ranges);
inline BroadcastOutcome simulate_broadcast(const CrossNetwork& network,
                                           const RangeAssignment& assignment) {
  return simulate_broadcast(network.placement(), assignment.ranges());
}

bool reaches_all(const Placement& placement, std::span<const double> ranges);
inline bool reaches_all(const CrossNetwork& network, const RangeAssignment& assignment) {
  return reaches_all(network.placement(), assignment.ranges());
}

/// b <-R- a: silencing `a` (everything else unchanged) leaves `b` unreached.
bool depends_on(const Placement& placement, std::span<const double> ranges, NodeId b, NodeId a);
inline bool depends_on(const CrossNetwork& network, const RangeAssignment& assignment, NodeId b,
                       NodeId a) {
  return depends_on(network.placement(), assignment.ranges(), b, a);
}

struct IncreasedRangeAudit {
  std::vector<NodeId> increased;  // N_hat nodes with R(a) > M(a)
  bool shape_ok = true;           // all other N_hat nodes have R in {0, M(a)}
};

IncreasedRangeAudit increased_range_audit(const CrossNetwork& network,
                                          const RangeAssignment& assignment);

}  // namespace crossbcast

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

#include <algorithm>
#include <cstdint>
#include <string>

#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

using Mask = std::uint64_t;

struct Candidate {
  double range = 0.0;
  double energy = 0.0;
  Mask covers = 0;
};

class Exhaustive {
 public:
  Exhaustive(const Placement& placement, double alpha) : placement_(placement) {
    const std::size_t n = placement.size();
    full_ = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    order_.push_back(placement.source());
    for (NodeId i = 0; i < n; ++i) {
      if (i != placement.source()) order_.push_back(i);
    }
    candidates_.resize(n);
    for (NodeId i = 0; i < n; ++i) {
      std::vector<double> values{0.0};
      for (NodeId u = 0; u < n; ++u) {
        if (u != i) values.push_back(placement.distance(i, u));
      }
      std::sort(values.begin(), values.end());
      values.erase(std::unique(values.begin(), values.end()), values.end());
      for (double r : values) {
        Candidate c{r, power_of(r, alpha), Mask{1} << i};
        if (r > 0.0) {
          for (NodeId v = 0; v < n; ++v) {
            if (within_range(placement.distance(i, v), r)) c.covers |= Mask{1} << v;
          }
        }
        candidates_[i].push_back(c);
      }
    }
    choice_.assign(n, 0);
    best_choice_.assign(n, 0);
  }

  std::vector<double> solve() {
    // One-hop star from the source is always feasible; start from it.
    const NodeId s = placement_.source();
    best_choice_[s] = candidates_[s].size() - 1;
    best_cost_ = candidates_[s].back().energy;
    descend(0, 0.0);
    std::vector<double> ranges(placement_.size());
    for (NodeId i = 0; i < ranges.size(); ++i) ranges[i] = candidates_[i][best_choice_[i]].range;
    return ranges;
  }

 private:
  void descend(std::size_t depth, double partial) {
    if (depth == order_.size()) {
      if (partial < best_cost_ && delivered()) {
        best_cost_ = partial;
        best_choice_ = choice_;
      }
      return;
    }
    const NodeId node = order_[depth];
    const auto& options = candidates_[node];
    for (std::size_t k = 0; k < options.size(); ++k) {
      const double total = partial + options[k].energy;
      if (total >= best_cost_) break;  // candidates are sorted by energy
      choice_[node] = k;
      descend(depth + 1, total);
    }
    choice_[node] = 0;
  }

  bool delivered() const {
    Mask reached = Mask{1} << placement_.source();
    Mask seen = 0;
    while (reached != seen) {
      Mask fresh = reached & ~seen;
      seen = reached;
      while (fresh) {
        const int u = __builtin_ctzll(fresh);
        fresh &= fresh - 1;
        reached |= candidates_[u][choice_[u]].covers;
      }
    }
    return reached == full_;
  }

  const Placement& placement_;
  Mask full_ = 0;
  std::vector<NodeId> order_;
  std::vector<std::vector<Candidate>> candidates_;
  std::vector<std::size_t> choice_;
  std::vector<std::size_t> best_choice_;
  double best_cost_ = 0.0;
};

}  // namespace

RangeAssignment brute_force_oracle(const Placement& placement, double alpha,
                                   BruteForceOptions options) {
  const std::size_t n = placement.size();
  if (n > options.max_nodes || n > 64) {
    throw TooLarge("brute force is capped at " + std::to_string(options.max_nodes) +
                   " nodes, got " + std::to_string(n));
  }
  if (n == 1) return RangeAssignment::zeros(1, alpha);
  return RangeAssignment(Exhaustive(placement, alpha).solve(), alpha);
}

}  // namespace crossbcast

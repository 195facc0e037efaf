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

#include "crossbcast/properties.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::string& detail) {
    ++r_.cases;
    if (ok) return;
    if (r_.violations++ == 0) r_.first_violation = detail;
  }
  template <typename F>
  void expect_lazy(bool ok, F&& detail) {
    if (ok) {
      ++r_.cases;
      return;
    }
    expect(false, detail());
  }
  PropertyResult done() { return std::move(r_); }

 private:
  PropertyResult r_;
};

std::string where(std::uint64_t seed, std::size_t n) {
  return "network seed " + std::to_string(seed) + ", N = " + std::to_string(n);
}

// Random ranges: zero or the distance to a random other node.
std::vector<double> random_ranges(const CrossNetwork& net, std::mt19937_64& rng) {
  std::vector<double> r(net.size(), 0.0);
  for (NodeId a = 0; a < net.size(); ++a) {
    if (unit_uniform(rng) < 0.3) continue;
    const auto b = static_cast<NodeId>(unit_uniform(rng) * static_cast<double>(net.size()));
    r[a] = net.distance(a, std::min(b, net.size() - 1));
  }
  return r;
}

// Every node before a reached node on its segment is reached too.
bool prefix_closed(const CrossNetwork& net, const BroadcastOutcome& out) {
  for (Segment s : kSegments) {
    bool gap = false;
    for (NodeId id : net.segment_nodes(s)) {
      if (!out.is_reached(id)) gap = true;
      else if (gap) return false;
    }
  }
  return true;
}

PropertyResult power_superadditivity(const PropertyOptions& o) {
  Check c("power superadditivity");
  std::mt19937_64 rng(splitmix64(o.seed ^ 0x1));
  for (std::size_t i = 0; i < o.vectors; ++i) {
    const std::size_t k = 2 + static_cast<std::size_t>(unit_uniform(rng) * 7);
    const double alpha = 2.0 + 4.0 * unit_uniform(rng);
    double sum = 0.0, parts = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      const double a = 1e-3 + unit_uniform(rng);
      sum += a;
      parts += std::pow(a, alpha);
    }
    const double whole = std::pow(sum, alpha);
    c.expect_lazy(whole >= parts * (1.0 - 1e-12), [&] {
      std::ostringstream s;
      s << "vector " << i << ": (sum)^a = " << whole << " < " << parts;
      return s.str();
    });
  }
  return c.done();
}

PropertyResult coverage_order(const PropertyOptions& o) {
  Check c("coverage extents ordered");
  std::mt19937_64 rng(splitmix64(o.seed ^ 0x2));
  for (std::size_t i = 0; i < o.samples; ++i) {
    const double h = 3.0 * unit_uniform(rng);
    const double r = unit_uniform(rng) < 0.05 ? h : 4.0 * unit_uniform(rng);
    const CoverageExtents e = coverage_extents(h, r);
    c.expect_lazy(e.same >= e.perp && e.perp >= e.oppo && e.oppo >= 0.0, [&] {
      std::ostringstream s;
      s << "h = " << h << ", r = " << r << " -> " << e.same << ", " << e.perp << ", " << e.oppo;
      return s.str();
    });
  }
  return c.done();
}

}  // namespace

std::vector<PropertyResult> run_property_suite(const PropertyOptions& o) {
  std::vector<PropertyResult> out;
  out.push_back(power_superadditivity(o));
  out.push_back(coverage_order(o));

  Check partition("segment labels partition the nodes");
  Check monotone("receivers monotone in range");
  Check disc_prefix("coverage prefix");
  Check sim_prefix("broadcast prefix");
  Check sim_monotone("broadcast monotone in ranges");
  Check antisym("depends_on antisymmetric");

  std::mt19937_64 rng(splitmix64(o.seed ^ 0x3));
  for (std::size_t i = 0; i < o.networks; ++i) {
    const std::uint64_t seed = trial_seed(o.seed, i);
    const std::size_t n = 2 + static_cast<std::size_t>(unit_uniform(rng) *
                                                      static_cast<double>(o.max_nodes - 1));
    const SourceMode mode = i % 4 == 0 ? SourceMode::kIntersection : SourceMode::kUniform;
    const CrossNetwork net = generate_random_cross(std::min(n, o.max_nodes), seed, 1.0, mode);
    const std::string ctx = where(seed, net.size());

    std::size_t labelled = 0;
    for (Segment s : kSegments) labelled += net.segment_nodes(s).size();
    bool agree = labelled + 1 == net.size();
    for (NodeId id = 1; id < net.size(); ++id) agree = agree && classify_segment(net, id) == net.segment_of(id);
    partition.expect(agree, ctx);

    for (NodeId a = 0; a < net.size(); ++a) {
      const double r1 = 2.0 * unit_uniform(rng);
      const double r2 = r1 + unit_uniform(rng);
      const auto small = receivers(net.placement(), a, r1);
      const auto big = receivers(net.placement(), a, r2);
      monotone.expect(std::includes(big.begin(), big.end(), small.begin(), small.end()),
                      ctx + ", node " + std::to_string(a));

      // b covered => every b' before b on S_b (and after a if S_b = S_a) covered.
      // "Before" on II points toward the source, i.e. away from the far
      // segments, so a disc centred on III, IV or V need not contain it.
      std::vector<char> got(net.size(), 0);
      for (NodeId b : big) got[b] = 1;
      const bool far_side = a != net.source() && net.segment_of(a) != Segment::I &&
                            net.segment_of(a) != Segment::II;
      bool closed = true;
      for (NodeId b : big) {
        if (b == net.source()) continue;
        const Segment sb = net.segment_of(b);
        if (sb == Segment::II && far_side) continue;
        for (NodeId bp : net.segment_nodes(sb)) {
          if (bp == b) break;
          const bool after_a = a == net.source() || net.segment_of(a) != sb ||
                               net.rank_in_segment(bp) > net.rank_in_segment(a);
          if (after_a && bp != a && !got[bp]) closed = false;
        }
      }
      disc_prefix.expect(closed, ctx + ", node " + std::to_string(a));
    }

    // Simulations on random assignments and on planner outputs.
    std::vector<std::vector<double>> assignments;
    for (int k = 0; k < 6; ++k) assignments.push_back(random_ranges(net, rng));
    const RangeAssignment dist = distributed_assignment(net);
    assignments.emplace_back(dist.ranges().begin(), dist.ranges().end());
    const RangeAssignment near = near_optimal_assignment(net);
    assignments.emplace_back(near.ranges().begin(), near.ranges().end());
    const RangeAssignment bip = bip_assignment(net);
    assignments.emplace_back(bip.ranges().begin(), bip.ranges().end());

    for (std::size_t k = 0; k < assignments.size(); ++k) {
      std::vector<double>& r = assignments[k];
      const BroadcastOutcome out = simulate_broadcast(net.placement(), r);
      sim_prefix.expect(prefix_closed(net, out), ctx + ", assignment " + std::to_string(k));

      const auto node = std::min(net.size() - 1,
                                 static_cast<NodeId>(unit_uniform(rng) * static_cast<double>(net.size())));
      std::vector<double> raised = r;
      raised[node] += unit_uniform(rng);
      const BroadcastOutcome more = simulate_broadcast(net.placement(), raised);
      bool superset = true;
      for (NodeId id = 0; id < net.size(); ++id) superset = superset && (!out.is_reached(id) || more.is_reached(id));
      sim_monotone.expect(superset, ctx + ", assignment " + std::to_string(k));

      if (!out.delivered() || net.size() > 14) continue;
      for (NodeId a = 0; a < net.size(); ++a) {
        for (NodeId b = a + 1; b < net.size(); ++b) {
          const bool both = depends_on(net.placement(), r, a, b) && depends_on(net.placement(), r, b, a);
          antisym.expect(!both, ctx + ", nodes " + std::to_string(a) + ", " + std::to_string(b));
        }
      }
    }
  }
  for (Check* c : {&partition, &monotone, &disc_prefix, &sim_prefix, &sim_monotone, &antisym}) {
    out.push_back(c->done());
  }
  return out;
}

}  // namespace crossbcast

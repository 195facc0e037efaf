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
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>

#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

using Mask = std::uint64_t;
constexpr double kInf = std::numeric_limits<double>::infinity();
// Bound comparisons between sums taken in different orders get this slack,
// so pruning can never discard a tuple that would have won.
constexpr double kBoundSlack = 1e-9;

// All k-subsets of `pool`, in lexicographic order.
std::vector<std::vector<NodeId>> subsets(const std::vector<NodeId>& pool, std::size_t k) {
  std::vector<std::vector<NodeId>> out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > pool.size()) return out;
  while (true) {
    std::vector<NodeId> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = pool[idx[i]];
    out.push_back(std::move(pick));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == pool.size() - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

struct Best {
  double cost = kInf;
  std::uint64_t index = 0;
  std::vector<std::uint8_t> order;  // segment walk order of the winner
  bool found() const { return cost < kInf; }

  // Strictly cheaper wins; equal cost keeps the earlier (t, c) index.
  void absorb(const Best& other) {
    if (!other.found()) return;
    if (!found() || other.cost < cost || (other.cost == cost && other.index < index)) {
      *this = other;
    }
  }
};

/// Precomputed receiver sets R_{i,j} and energies, shared by all workers.
struct Tables {
  std::size_t n = 0;
  NodeId source = 0;
  Mask full = 0;
  std::vector<Mask> cover;      // cover[i*n + j]: nodes within d(i, j) of i
  std::vector<double> energy;   // d(i, j)^alpha
  std::vector<int> next;        // next adjacent neighbor, -1 if last
  std::vector<std::vector<NodeId>> segments;  // non-empty segments, walk order inside
  std::vector<std::vector<NodeId>> t_set;     // T: free nodes besides the source
  std::uint64_t c_size = 0;                   // |C| = n^(1 + |t|)
  std::size_t digits = 0;

  Tables(const CrossNetwork& net, double alpha, SearchMode mode) {
    n = net.size();
    source = net.source();
    full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
    cover.assign(n * n, 0);
    energy.assign(n * n, 0.0);
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = 0; j < n; ++j) {
        const double r = net.distance(i, j);
        energy[i * n + j] = power_of(r, alpha);
        Mask m = Mask{1} << i;
        for (NodeId v = 0; v < n; ++v) {
          if (r > 0.0 && within_range(net.distance(i, v), r)) m |= Mask{1} << v;
        }
        cover[i * n + j] = m;
      }
    }
    next.assign(n, -1);
    for (NodeId a = 1; a < n; ++a) {
      if (auto nx = next_adjacent(net, a)) next[a] = static_cast<int>(*nx);
    }
    for (Segment s : kSegments) {
      const auto nodes = net.segment_nodes(s);
      if (!nodes.empty()) segments.emplace_back(nodes.begin(), nodes.end());
    }

    std::vector<NodeId> specials;
    std::vector<NodeId> pool;
    if (mode == SearchMode::kGeneral) {
      specials = net.special_nodes();
      pool = net.n_hat();
    } else {
      for (NodeId a = 1; a < n; ++a) pool.push_back(a);
    }
    const std::size_t k = std::min<std::size_t>(3, pool.size());
    for (auto& chosen : subsets(pool, k)) {
      chosen.insert(chosen.end(), specials.begin(), specials.end());
      t_set.push_back(std::move(chosen));
    }
    digits = 1 + k + specials.size();
    c_size = 1;
    for (std::size_t d = 0; d < digits; ++d) c_size *= n;
  }

  std::uint64_t total() const { return c_size * t_set.size(); }
};

/// Scans a contiguous block of (t, c) indices.
class Worker {
 public:
  Worker(const Tables& tables, bool prune, double outside_bound)
      : tb_(tables), prune_(prune), outside_bound_(outside_bound) {
    slot_.assign(tb_.n, -1);
    digit_.assign(tb_.digits, 0);
    member_.assign(tb_.digits, 0);
    prefix_.assign(tb_.digits + 1, 0.0);
    order_.reserve(tb_.segments.size());
  }

  void scan(std::uint64_t lo, std::uint64_t hi) {
    std::uint64_t index = lo;
    while (index < hi) {
      const std::uint64_t t = index / tb_.c_size;
      load_t(t);
      const std::uint64_t t_end = std::min(hi, (t + 1) * tb_.c_size);
      index = scan_t(index, t_end, t * tb_.c_size);
    }
  }

  const Best& best() const { return best_; }
  void seed(const Best& b) { best_ = b; }
  std::uint64_t iterations() const { return iterations_; }
  std::uint64_t tuples() const { return tuples_; }

 private:
  void load_t(std::uint64_t t) {
    std::fill(slot_.begin(), slot_.end(), -1);
    member_[0] = tb_.source;
    const auto& members = tb_.t_set[t];
    for (std::size_t j = 0; j < members.size(); ++j) {
      member_[j + 1] = members[j];
      slot_[members[j]] = static_cast<int>(j + 1);
    }
  }

  double cutoff() const { return std::min(best_.cost, outside_bound_); }

  std::uint64_t scan_t(std::uint64_t index, std::uint64_t end, std::uint64_t base) {
    // Decode c digits, most significant first.
    std::uint64_t rest = index - base;
    for (std::size_t d = tb_.digits; d-- > 0;) {
      digit_[d] = static_cast<NodeId>(rest % tb_.n);
      rest /= tb_.n;
    }
    while (index < end) {
      if (prune_) {
        const double bound = cutoff() * (1.0 + kBoundSlack);
        std::size_t cut = tb_.digits;
        for (std::size_t d = 0; d < tb_.digits; ++d) {
          prefix_[d + 1] = prefix_[d] + tb_.energy[member_[d] * tb_.n + digit_[d]];
          if (prefix_[d + 1] > bound) {
            cut = d;
            break;
          }
        }
        if (cut < tb_.digits) {
          // Nothing below this prefix can win: jump past the whole block.
          std::uint64_t block = 1;
          for (std::size_t d = cut + 1; d < tb_.digits; ++d) block *= tb_.n;
          const std::uint64_t offset = index - base;
          index = base + (offset / block + 1) * block;
          for (std::size_t d = cut + 1; d < tb_.digits; ++d) digit_[d] = 0;
          if (!advance(cut)) return std::min(index, end);
          continue;
        }
      }
      evaluate(index);
      ++index;
      if (!advance(tb_.digits - 1)) break;
    }
    return std::min(index, end);
  }

  // Odometer increment at position `pos` with carry; false on wrap-around.
  bool advance(std::size_t pos) {
    for (std::size_t d = pos + 1; d-- > 0;) {
      if (++digit_[d] < tb_.n) return true;
      digit_[d] = 0;
    }
    return false;
  }

  void evaluate(std::uint64_t index) {
    ++tuples_;
    current_index_ = index;
    const NodeId s = tb_.source;
    const Mask tags = tb_.cover[s * tb_.n + digit_[0]];
    const double energy = tb_.energy[s * tb_.n + digit_[0]];
    order_.clear();
    descend(0, tags, energy);
  }

  // Depth-first over segment orderings. Orderings sharing a prefix share its
  // walk; an aborted prefix aborts every ordering that starts with it.
  void descend(unsigned used, Mask tags, double energy) {
    const std::size_t segs = tb_.segments.size();
    if (order_.size() == segs) {
      if (energy < best_.cost) {
        best_.cost = energy;
        best_.index = current_index_;
        best_.order = order_;
      }
      return;
    }
    for (std::size_t k = 0; k < segs; ++k) {
      if (used & (1u << k)) continue;
      Mask t = tags;
      double e = energy;
      if (!walk_segment(k, t, e)) continue;
      if (prune_ && (e >= best_.cost || e > outside_bound_ * (1.0 + kBoundSlack))) continue;
      order_.push_back(static_cast<std::uint8_t>(k));
      descend(used | (1u << k), t, e);
      order_.pop_back();
    }
  }

  bool walk_segment(std::size_t k, Mask& tags, double& energy) {
    const std::size_t n = tb_.n;
    for (NodeId node : tb_.segments[k]) {
      ++iterations_;
      if (!(tags >> node & 1)) return false;
      const int j = slot_[node];
      if (j >= 0) {
        const std::size_t cell = node * n + digit_[j];
        tags |= tb_.cover[cell];
        energy += tb_.energy[cell];
      } else {
        const int nx = tb_.next[node];
        if (nx >= 0 && !(tags >> nx & 1)) {
          const std::size_t cell = node * n + static_cast<std::size_t>(nx);
          tags |= tb_.cover[cell];
          energy += tb_.energy[cell];
        }
      }
    }
    return true;
  }

  const Tables& tb_;
  bool prune_;
  double outside_bound_;
  std::vector<int> slot_;        // node -> digit position, -1 if not free
  std::vector<NodeId> digit_;    // c-tuple
  std::vector<NodeId> member_;   // digit position -> node
  std::vector<double> prefix_;
  std::vector<std::uint8_t> order_;
  std::uint64_t current_index_ = 0;
  std::uint64_t iterations_ = 0;
  std::uint64_t tuples_ = 0;
  Best best_;
};

// Replays the winning (t, c, ordering) to recover the ranges.
std::vector<double> replay(const CrossNetwork& net, const Tables& tb, const Best& best) {
  const std::uint64_t t = best.index / tb.c_size;
  std::uint64_t rest = best.index % tb.c_size;
  std::vector<NodeId> digit(tb.digits);
  for (std::size_t d = tb.digits; d-- > 0;) {
    digit[d] = static_cast<NodeId>(rest % tb.n);
    rest /= tb.n;
  }
  std::vector<int> slot(tb.n, -1);
  for (std::size_t j = 0; j < tb.t_set[t].size(); ++j) slot[tb.t_set[t][j]] = static_cast<int>(j + 1);

  std::vector<double> r(tb.n, 0.0);
  const NodeId s = tb.source;
  r[s] = net.distance(s, digit[0]);
  Mask tags = tb.cover[s * tb.n + digit[0]];
  for (std::uint8_t k : best.order) {
    for (NodeId node : tb.segments[k]) {
      const int j = slot[node];
      if (j >= 0) {
        r[node] = net.distance(node, digit[j]);
        tags |= tb.cover[node * tb.n + digit[j]];
      } else if (tb.next[node] >= 0 && !(tags >> tb.next[node] & 1)) {
        const auto nx = static_cast<NodeId>(tb.next[node]);
        r[node] = net.distance(node, nx);
        tags |= tb.cover[node * tb.n + nx];
      }
    }
  }
  return r;
}

}  // namespace

OptimalSearchResult optimal_search(const CrossNetwork& network, double alpha, SearchMode mode,
                                   const OptimalSearchOptions& options) {
  if (mode == SearchMode::kSourceAtIntersection && !network.source_at_intersection()) {
    throw SourceNotAtIntersection("the source is not on the intersection");
  }
  if (network.size() > kMaxSearchNodes) {
    throw TooLarge("optimal search supports at most " + std::to_string(kMaxSearchNodes) +
                   " nodes");
  }
  OptimalSearchResult result;
  if (network.size() == 1) {
    result.assignment = RangeAssignment::zeros(1, alpha);
    return result;
  }

  const Tables tables(network, alpha, mode);
  const double outside_bound =
      options.prune ? cost(near_optimal_assignment(network, alpha)) : kInf;
  const std::uint64_t total = tables.total();

  Best best;
  std::uint64_t start = 0;
  std::uint64_t iterations = 0;
  if (options.resume) {
    const SearchCheckpoint& cp = *options.resume;
    start = cp.next_index;
    iterations = cp.iterations;
    if (cp.has_incumbent) {
      // Re-derive the walk order by replaying from the stored index.
      Worker probe(tables, false, kInf);
      probe.scan(cp.incumbent_index, cp.incumbent_index + 1);
      best = probe.best();
    }
  }

  const unsigned threads = std::max(1u, options.threads);
  // Work is handed out in batches; budget and progress are checked between
  // batches so interruption points do not depend on thread timing.
  const std::uint64_t chunk = std::max<std::uint64_t>(1, std::min<std::uint64_t>(tables.c_size, 1u << 16));
  while (start < total) {
    if (iterations >= options.budget) {
      SearchCheckpoint cp;
      cp.next_index = start;
      cp.iterations = iterations;
      if (best.found()) {
        cp.has_incumbent = true;
        cp.incumbent_cost = best.cost;
        cp.incumbent_index = best.index;
        cp.incumbent_ranges = replay(network, tables, best);
      }
      throw BudgetExceeded("optimal search budget of " + std::to_string(options.budget) +
                               " node visits exhausted at index " + std::to_string(start) + " of " +
                               std::to_string(total),
                           std::move(cp));
    }
    std::vector<Worker> workers;
    workers.reserve(threads);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> spans;
    for (unsigned w = 0; w < threads && start < total; ++w) {
      const std::uint64_t end = std::min(total, start + chunk);
      spans.emplace_back(start, end);
      workers.emplace_back(tables, options.prune, outside_bound);
      workers.back().seed(best);
      start = end;
    }
    if (workers.size() == 1) {
      workers[0].scan(spans[0].first, spans[0].second);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers.size(); ++w) {
        pool.emplace_back([&, w] { workers[w].scan(spans[w].first, spans[w].second); });
      }
    }
    for (const Worker& w : workers) {
      Best b = w.best();
      // Seeded incumbents come back unchanged; only genuine improvements count.
      best.absorb(b);
      iterations += w.iterations();
      result.tuples += w.tuples();
    }
    if (options.progress) {
      options.progress(SearchProgress{start, total, iterations, best.cost});
    }
  }

  if (!best.found()) {
    throw std::logic_error("optimal search found no delivering assignment");
  }
  result.assignment = RangeAssignment(replay(network, tables, best), alpha);
  result.iterations = iterations;
  return result;
}

RangeAssignment optimal_assignment(const CrossNetwork& network, double alpha,
                                   const OptimalSearchOptions& options) {
  return optimal_search(network, alpha, SearchMode::kGeneral, options).assignment;
}

RangeAssignment optimal_assignment_source_at_intersection(const CrossNetwork& network,
                                                          double alpha,
                                                          const OptimalSearchOptions& options) {
  return optimal_search(network, alpha, SearchMode::kSourceAtIntersection, options).assignment;
}

}  // namespace crossbcast

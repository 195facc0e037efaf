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

#include "crossbcast/grid_network.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <optional>
#include <queue>
#include <tuple>
#include <random>
#include <string>

#include "crossbcast/errors.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/planners.hpp"

namespace crossbcast {
namespace {

constexpr double kOnSegmentTol = 1e-9;

LineSegment normalised(LineSegment s) {
  const bool horizontal = s.a.y == s.b.y;
  const bool vertical = s.a.x == s.b.x;
  if (horizontal == vertical) {
    throw ValidationError("segments must be axis-aligned with positive length");
  }
  if ((horizontal && s.a.x > s.b.x) || (vertical && s.a.y > s.b.y)) std::swap(s.a, s.b);
  return s;
}

}  // namespace

bool LineSegment::contains(const Point2& p, double tol) const {
  if (horizontal()) {
    return std::abs(p.y - a.y) <= tol && p.x >= a.x - tol && p.x <= b.x + tol;
  }
  return std::abs(p.x - a.x) <= tol && p.y >= a.y - tol && p.y <= b.y + tol;
}

GridNetwork GridNetwork::create(std::vector<LineSegment> segments, std::vector<Point2> nodes,
                                std::vector<std::size_t> node_segment, NodeId source) {
  if (segments.empty()) throw ValidationError("grid has no segments");
  if (nodes.size() != node_segment.size()) {
    throw ValidationError("every node needs a segment index");
  }
  for (auto& s : segments) s = normalised(s);
  const std::size_t m = segments.size();

  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const LineSegment& p = segments[i];
      const LineSegment& q = segments[j];
      if (p.horizontal() != q.horizontal()) continue;
      const bool same_line = p.horizontal() ? p.a.y == q.a.y : p.a.x == q.a.x;
      if (!same_line) continue;
      const double overlap =
          std::min(p.along(p.b), q.along(q.b)) - std::max(p.along(p.a), q.along(q.a));
      if (overlap > 0.0) {
        throw ValidationError("segments " + std::to_string(i) + " and " + std::to_string(j) +
                              " overlap");
      }
    }
  }

  GridNetwork g;
  g.segments_ = std::move(segments);
  for (std::size_t h = 0; h < m; ++h) {
    if (!g.segments_[h].horizontal()) continue;
    for (std::size_t v = 0; v < m; ++v) {
      if (g.segments_[v].horizontal()) continue;
      const Point2 at{g.segments_[v].a.x, g.segments_[h].a.y};
      if (g.segments_[h].contains(at) && g.segments_[v].contains(at)) {
        g.intersections_.push_back({at, h, v});
      }
    }
  }

  // Snap nodes onto their segment and settle shared-endpoint ownership.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (node_segment[i] >= m) throw ValidationError("node " + std::to_string(i) + " names no segment");
    Point2& p = nodes[i];
    const LineSegment& s = g.segments_[node_segment[i]];
    if (!s.contains(p, kOnSegmentTol)) {
      throw ValidationError("node " + std::to_string(i) + " is not on segment " +
                            std::to_string(node_segment[i]));
    }
    if (s.horizontal()) p.y = s.a.y;
    else p.x = s.a.x;
    for (std::size_t k = 0; k < node_segment[i]; ++k) {
      if (g.segments_[k].contains(p)) {
        node_segment[i] = k;
        break;
      }
    }
  }
  g.placement_ = Placement(std::move(nodes), source);
  g.node_segment_ = std::move(node_segment);
  for (NodeId a = 0; a < g.size(); ++a) {
    for (NodeId b = a + 1; b < g.size(); ++b) {
      if (g.position(a) == g.position(b)) {
        throw ValidationError("nodes " + std::to_string(a) + " and " + std::to_string(b) +
                              " share a position");
      }
    }
  }

  g.by_segment_.assign(m, {});
  for (NodeId id = 0; id < g.size(); ++id) g.by_segment_[g.node_segment_[id]].push_back(id);
  for (std::size_t s = 0; s < m; ++s) {
    if (g.by_segment_[s].empty()) {
      throw EmptySegment("segment " + std::to_string(s) + " carries no node");
    }
    const LineSegment& seg = g.segments_[s];
    std::sort(g.by_segment_[s].begin(), g.by_segment_[s].end(), [&](NodeId a, NodeId b) {
      return seg.along(g.position(a)) < seg.along(g.position(b));
    });
  }

  // Segments linked by intersections must form one component.
  std::vector<std::size_t> comp(m);
  for (std::size_t i = 0; i < m; ++i) comp[i] = i;
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& x : g.intersections_) comp[find(x.horizontal)] = find(x.vertical);
  for (std::size_t i = 1; i < m; ++i) {
    if (find(i) != find(0)) throw DisconnectedGrid("segment graph is not connected");
  }
  return g;
}

namespace {

struct Junction {
  std::size_t segment_a = 0;  // for the source junction only segment_a is used
  std::size_t segment_b = 0;
  Point2 at;
  bool is_source = false;
};

// Junction graph edge: neighbouring junctions along one segment.
struct Link {
  std::size_t to = 0;
  std::size_t segment = 0;
};

// Nodes of one stretch between neighbouring junctions, split by feeding end.
// `low` is fed from the lower junction (ascending), `high` from the upper
// one (descending), so both chains start next to their feeder.
struct Piece {
  std::vector<NodeId> low;
  std::vector<NodeId> high;
};

class GridPlanner {
 public:
  GridPlanner(const GridNetwork& grid, double alpha) : g_(grid), alpha_(alpha) {}

  GridDistributedPlan run() {
    build_junctions();
    split_stretches();
    grow_tree();
    GridDistributedPlan plan;
    std::vector<double> r(g_.size(), 0.0);
    plan.chain_obligation.assign(g_.size(), 0.0);
    chain_pieces(r, plan.chain_obligation);
    // Diamonds in arrival order: a root may be borrowed from the parent's hub.
    hub_.assign(junctions_.size(), {});
    if (junctions_[source_junction_].is_source && !is_intersection(source_junction_)) {
      hub_[source_junction_] = {g_.source()};
    }
    std::vector<LocalDiamond> diamonds(g_.intersections().size());
    for (std::size_t j : order_) {
      if (!is_intersection(j)) continue;
      diamonds[j] = diamond_at(j);
      hub_[j] = diamonds[j].vertices;
      for (const auto& [parent, child] : diamonds[j].tree_edges) {
        r[parent] = std::max(r[parent], g_.placement().distance(parent, child));
      }
      plan.bfs_order.push_back(j);
    }
    plan.diamonds = std::move(diamonds);
    plan.assignment = RangeAssignment(std::move(r), alpha_);
    return plan;
  }

 private:
  bool is_intersection(std::size_t j) const { return j < g_.intersections().size(); }

  double along(std::size_t seg, NodeId id) const {
    return g_.segments()[seg].along(g_.position(id));
  }
  double along(std::size_t seg, const Point2& p) const { return g_.segments()[seg].along(p); }

  void build_junctions() {
    const auto xs = g_.intersections();
    const Point2& sp = g_.position(g_.source());
    source_junction_ = xs.size();
    for (std::size_t x = 0; x < xs.size(); ++x) {
      junctions_.push_back({xs[x].horizontal, xs[x].vertical, xs[x].at, false});
      if (xs[x].at == sp && source_junction_ == xs.size()) source_junction_ = x;
    }
    // A source away from every intersection gets a junction of its own.
    if (source_junction_ == xs.size()) {
      const std::size_t sseg = g_.segment_of(g_.source());
      junctions_.push_back({sseg, sseg, sp, false});
    }
    junctions_[source_junction_].is_source = true;

    on_segment_.assign(g_.segments().size(), {});
    for (std::size_t j = 0; j < junctions_.size(); ++j) {
      on_segment_[junctions_[j].segment_a].push_back(j);
      if (junctions_[j].segment_b != junctions_[j].segment_a) {
        on_segment_[junctions_[j].segment_b].push_back(j);
      }
    }
    links_.assign(junctions_.size(), {});
    for (std::size_t s = 0; s < on_segment_.size(); ++s) {
      auto& list = on_segment_[s];
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        const double ta = along(s, junctions_[a].at);
        const double tb = along(s, junctions_[b].at);
        return ta < tb || (ta == tb && a < b);
      });
      for (std::size_t i = 1; i < list.size(); ++i) {
        links_[list[i - 1]].push_back({list[i], s});
        links_[list[i]].push_back({list[i - 1], s});
      }
    }
    for (auto& l : links_) {
      std::sort(l.begin(), l.end(), [](const Link& a, const Link& b) {
        return a.to < b.to || (a.to == b.to && a.segment < b.segment);
      });
    }
  }

  // Nodes of every stretch in ascending order along the segment.
  void split_stretches() {
    raw_.assign(on_segment_.size(), {});
    for (std::size_t seg = 0; seg < on_segment_.size(); ++seg) {
      const auto& js = on_segment_[seg];
      std::vector<double> cuts;
      for (std::size_t j : js) cuts.push_back(along(seg, junctions_[j].at));
      raw_[seg].assign(js.size() + 1, {});
      for (NodeId id : g_.segment_nodes(seg)) {
        if (id == g_.source()) continue;
        const double t = along(seg, id);
        raw_[seg][static_cast<std::size_t>(std::upper_bound(cuts.begin(), cuts.end(), t) -
                                           cuts.begin())]
            .push_back(id);
      }
    }
  }

  struct Gap {
    double width = 0.0;
    std::size_t split = 0;  // nodes before it are fed from the lower junction
  };

  // Widest gap of the stretch between junctions p-1 and p, counting the
  // stretches from each junction to its nearest node.
  Gap widest_gap(std::size_t seg, std::size_t p) const {
    const auto& js = on_segment_[seg];
    const auto& nodes = raw_[seg][p];
    const double lo = along(seg, junctions_[js[p - 1]].at);
    const double hi = along(seg, junctions_[js[p]].at);
    if (nodes.empty()) return {hi - lo, 0};
    Gap g{along(seg, nodes.front()) - lo, 0};
    for (std::size_t i = 1; i <= nodes.size(); ++i) {
      const double w = (i == nodes.size() ? hi : along(seg, nodes[i])) - along(seg, nodes[i - 1]);
      if (w > g.width) g = {w, i};
    }
    return g;
  }

  // Arrival order: junctions join a tree grown from the source, always along
  // the stretch whose widest gap is narrowest, so the widest gaps end up on
  // stretches that get fed from both ends.
  void grow_tree() {
    const std::size_t nj = junctions_.size();
    rank_.assign(nj, std::numeric_limits<std::size_t>::max());
    parent_.assign(nj, std::nullopt);
    using Entry = std::tuple<double, std::size_t, std::size_t, std::size_t>;  // width, to, seg, from
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> frontier;
    auto join = [&](std::size_t j) {
      rank_[j] = order_.size();
      order_.push_back(j);
      for (const Link& l : links_[j]) {
        if (rank_[l.to] != std::numeric_limits<std::size_t>::max()) continue;
        const std::size_t piece = std::max(slot(l.segment, j), slot(l.segment, l.to));
        frontier.emplace(widest_gap(l.segment, piece).width, l.to, l.segment, j);
      }
    };
    join(source_junction_);
    while (!frontier.empty()) {
      const auto [width, to, seg, from] = frontier.top();
      frontier.pop();
      if (rank_[to] != std::numeric_limits<std::size_t>::max()) continue;
      parent_[to] = Link{from, seg};
      join(to);
    }
    if (order_.size() != nj) throw DisconnectedGrid("some intersections cannot be reached");
  }

  bool tree_link(std::size_t seg, std::size_t a, std::size_t b) const {
    auto is = [&](std::size_t child, std::size_t parent) {
      return parent_[child] && parent_[child]->to == parent && parent_[child]->segment == seg;
    };
    return is(a, b) || is(b, a);
  }

  // Splits every segment at its junctions into stretches. A stretch on the
  // breadth-first tree is chained away from the parent junction; one that
  // closes a cycle is cut at its widest gap and fed from both ends.
  void chain_pieces(std::vector<double>& r, std::vector<double>& obligation) {
    const NodeId s = g_.source();
    pieces_.assign(on_segment_.size(), {});
    for (std::size_t seg = 0; seg < on_segment_.size(); ++seg) {
      const auto& js = on_segment_[seg];
      pieces_[seg].assign(raw_[seg].size(), {});
      for (std::size_t p = 0; p < raw_[seg].size(); ++p) {
        const auto& nodes = raw_[seg][p];
        Piece& piece = pieces_[seg][p];
        if (nodes.empty()) continue;
        const bool has_low = p > 0;
        const bool has_high = p < js.size();
        std::size_t split = has_low ? nodes.size() : 0;  // nodes[0, split) fed from below
        if (has_low && has_high) {
          if (tree_link(seg, js[p - 1], js[p])) {
            split = rank_[js[p - 1]] < rank_[js[p]] ? nodes.size() : 0;
          } else {
            split = widest_gap(seg, p).split;
          }
        }
        piece.low.assign(nodes.begin(), nodes.begin() + static_cast<std::ptrdiff_t>(split));
        piece.high.assign(nodes.rbegin(), nodes.rend() - static_cast<std::ptrdiff_t>(split));
        for (const auto* chain : {&piece.low, &piece.high}) {
          for (std::size_t i = 0; i + 1 < chain->size(); ++i) {
            const NodeId a = (*chain)[i];
            obligation[a] = g_.placement().distance(a, (*chain)[i + 1]);
            r[a] = std::max(r[a], obligation[a]);
          }
        }
        auto feeds_from_source = [&](std::size_t j) {
          return junctions_[j].is_source && !is_intersection(j);
        };
        if (!piece.low.empty() && feeds_from_source(js[p - 1])) {
          obligation[s] = std::max(obligation[s], g_.placement().distance(s, piece.low.front()));
        }
        if (!piece.high.empty() && feeds_from_source(js[p])) {
          obligation[s] = std::max(obligation[s], g_.placement().distance(s, piece.high.front()));
        }
        r[s] = std::max(r[s], obligation[s]);
      }
    }
  }

  std::size_t slot(std::size_t seg, std::size_t junction) const {
    const auto& js = on_segment_[seg];
    return static_cast<std::size_t>(std::find(js.begin(), js.end(), junction) - js.begin());
  }

  NodeId root_of(std::size_t x) const {
    if (junctions_[x].is_source) return g_.source();
    const Link& arrival = *parent_[x];
    const std::size_t seg = arrival.segment;
    // The stretch between parent and x is chained from the parent; its far
    // end is the closest node that already has the data.
    const std::size_t at = slot(seg, x);
    const std::size_t from = slot(seg, arrival.to);
    const Piece& piece = pieces_[seg][std::max(at, from)];
    const auto& chain = from < at ? piece.low : piece.high;
    if (!chain.empty()) return chain.back();
    // Empty stretch: the parent's hub node closest to x relays.
    const auto& hub = hub_[arrival.to];
    return *std::min_element(hub.begin(), hub.end(), [&](NodeId a, NodeId b) {
      const double da = crossbcast::distance(g_.position(a), junctions_[x].at);
      const double db = crossbcast::distance(g_.position(b), junctions_[x].at);
      return da < db || (da == db && a < b);
    });
  }

  LocalDiamond diamond_at(std::size_t x) {
    const GridIntersection& cross = g_.intersections()[x];
    LocalDiamond d;
    d.intersection = x;
    d.root = root_of(x);
    d.vertices.push_back(d.root);
    std::vector<NodeId> relays{d.root};
    auto add = [&](NodeId v, bool relay) {
      if (std::find(d.vertices.begin(), d.vertices.end(), v) != d.vertices.end()) return;
      d.vertices.push_back(v);
      if (relay) relays.push_back(v);
    };
    for (std::size_t seg : {cross.horizontal, cross.vertical}) {
      const std::size_t at = slot(seg, x);
      const auto& js = on_segment_[seg];
      const Piece& below = pieces_[seg][at];
      const Piece& above = pieces_[seg][at + 1];
      // First node of every stretch this intersection feeds.
      if (!below.high.empty()) add(below.high.front(), false);
      if (!above.low.empty()) add(above.low.front(), false);
      // Chain ends next to x fed from a junction that already has the data
      // can relay as well.
      if (below.high.empty() && !below.low.empty() && rank_[js[at - 1]] < rank_[x]) {
        add(below.low.back(), true);
      }
      if (above.low.empty() && !above.high.empty() && rank_[js[at + 1]] < rank_[x]) {
        add(above.high.back(), true);
      }
    }
    d.tree_edges = rooted_forest_edges(g_.placement(), d.vertices, relays);
    return d;
  }

  const GridNetwork& g_;
  double alpha_;
  std::vector<Junction> junctions_;
  std::size_t source_junction_ = 0;
  std::vector<std::vector<std::size_t>> on_segment_;
  std::vector<std::vector<Link>> links_;
  std::vector<std::size_t> rank_;
  std::vector<std::optional<Link>> parent_;
  std::vector<std::size_t> order_;
  std::vector<std::vector<std::vector<NodeId>>> raw_;  // [segment][piece], ascending
  std::vector<std::vector<Piece>> pieces_;             // [segment][piece]
  std::vector<std::vector<NodeId>> hub_;                 // diamond vertices per junction
};

}  // namespace

GridDistributedPlan grid_distributed_plan(const GridNetwork& grid, double alpha) {
  return GridPlanner(grid, alpha).run();
}

RangeAssignment grid_distributed_assignment(const GridNetwork& grid, double alpha) {
  return grid_distributed_plan(grid, alpha).assignment;
}

GridNetwork generate_square_grid(int k, double side, std::size_t nodes, std::uint64_t seed) {
  if (k < 1) throw ValidationError("grid needs k >= 1");
  if (!(side > 0.0)) throw ValidationError("grid side must be positive");
  const std::size_t lines = 2 * static_cast<std::size_t>(k + 1);
  if (nodes < lines) {
    throw InfeasibleN("a " + std::to_string(k) + "x" + std::to_string(k) + " grid needs at least " +
                      std::to_string(lines) + " nodes");
  }
  std::vector<LineSegment> segments;
  const double step = side / k;
  for (int i = 0; i <= k; ++i) segments.push_back({{0.0, i * step}, {side, i * step}});
  for (int i = 0; i <= k; ++i) segments.push_back({{i * step, 0.0}, {i * step, side}});

  std::mt19937_64 rng(seed);
  auto on_line = [&](std::size_t seg) {
    while (true) {
      const double t = unit_uniform(rng) * side;
      // Grid-line coordinates would put the node on a crossing.
      if (std::abs(std::remainder(t, step)) == 0.0) continue;
      const LineSegment& s = segments[seg];
      return s.horizontal() ? Point2{t, s.a.y} : Point2{s.a.x, t};
    }
  };

  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point2> points;
    std::vector<std::size_t> owner;
    for (std::size_t seg = 0; seg < lines; ++seg) {
      points.push_back(on_line(seg));
      owner.push_back(seg);
    }
    while (points.size() < nodes) {
      const auto seg = std::min(lines - 1, static_cast<std::size_t>(unit_uniform(rng) * lines));
      points.push_back(on_line(seg));
      owner.push_back(seg);
    }
    const auto source = std::min(nodes - 1, static_cast<std::size_t>(unit_uniform(rng) * nodes));
    try {
      GridNetwork g = GridNetwork::create(segments, std::move(points), std::move(owner), source);
      // Near-tied distances would make the MST ambiguous: draw again.
      if (g.placement().min_distance_gap() > kDistinctDistanceTol) return g;
    } catch (const ValidationError&) {
      // Coincident nodes: draw again.
    }
  }
  throw ValidationError("could not draw a grid network");
}

GridNetwork cross_as_grid(const CrossNetwork& network) {
  double reach = network.arm_half_length();
  for (NodeId id = 0; id < network.size(); ++id) {
    const Point2& p = network.position(id);
    reach = std::max({reach, std::abs(p.x), std::abs(p.y)});
  }
  std::vector<Point2> points(network.placement().points().begin(),
                             network.placement().points().end());
  // The vertical line only exists if something sits on it.
  const bool vertical = std::any_of(points.begin(), points.end(),
                                    [](const Point2& p) { return p.y != 0.0; });
  std::vector<LineSegment> segments{{{-reach, 0.0}, {reach, 0.0}}};
  if (vertical) segments.push_back({{0.0, -reach}, {0.0, reach}});
  std::vector<std::size_t> owner(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) owner[i] = points[i].y == 0.0 ? 0 : 1;
  return GridNetwork::create(std::move(segments), std::move(points), std::move(owner),
                             network.source());
}

}  // namespace crossbcast

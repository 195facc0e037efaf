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

#include "crossbcast/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "crossbcast/errors.hpp"

namespace crossbcast {
namespace {

using nlohmann::json;

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed JSON: ") + e.what());
  }
}

// Wraps library lookups so a missing key or wrong type is a ValidationError.
template <typename F>
auto guarded(std::string_view what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

double number(const json& v) {
  if (!v.is_number()) throw ValidationError("expected a number, got " + v.dump());
  return v.get<double>();
}

Point2 point(const json& v) {
  if (!v.is_array() || v.size() != 2) throw ValidationError("expected [x, y], got " + v.dump());
  return {number(v[0]), number(v[1])};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string to_json(const CrossNetwork& network) {
  json nodes = json::array();
  for (NodeId id = 1; id < network.size(); ++id) {
    const Point2& p = network.position(id);
    nodes.push_back({p.x, p.y});
  }
  const Point2& s = network.position(network.source());
  return dump({{"arm_half_length", network.arm_half_length()},
               {"source", {s.x, s.y}},
               {"nodes", std::move(nodes)}});
}

CrossNetwork cross_from_json(std::string_view text, CrossNetwork::Options options) {
  const json j = parse(text);
  return guarded("cross network", [&] {
    if (!j.is_object()) throw ValidationError("cross network must be a JSON object");
    const double arm = j.contains("arm_half_length") ? number(j.at("arm_half_length")) : 1.0;
    const Point2 source = point(j.at("source"));
    std::vector<Point2> others;
    for (const json& p : j.at("nodes")) others.push_back(point(p));
    return CrossNetwork::from_points(source, others, arm, options);
  });
}

std::string to_json(const GridNetwork& grid) {
  json segments = json::array();
  for (const LineSegment& s : grid.segments()) segments.push_back({s.a.x, s.a.y, s.b.x, s.b.y});
  json nodes = json::array();
  for (NodeId id = 0; id < grid.size(); ++id) {
    const Point2& p = grid.position(id);
    nodes.push_back({p.x, p.y, grid.segment_of(id)});
  }
  return dump({{"segments", std::move(segments)},
               {"nodes", std::move(nodes)},
               {"source", grid.source()}});
}

GridNetwork grid_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("grid network", [&] {
    if (!j.is_object()) throw ValidationError("grid network must be a JSON object");
    std::vector<LineSegment> segments;
    for (const json& s : j.at("segments")) {
      if (!s.is_array() || s.size() != 4) {
        throw ValidationError("expected [x1, y1, x2, y2], got " + s.dump());
      }
      segments.push_back({{number(s[0]), number(s[1])}, {number(s[2]), number(s[3])}});
    }
    std::vector<Point2> points;
    std::vector<std::size_t> owner;
    for (const json& n : j.at("nodes")) {
      if (!n.is_array() || n.size() != 3 || !n[2].is_number_unsigned()) {
        throw ValidationError("expected [x, y, segment], got " + n.dump());
      }
      points.push_back({number(n[0]), number(n[1])});
      owner.push_back(n[2].get<std::size_t>());
    }
    const json& src = j.at("source");
    if (!src.is_number_unsigned()) throw ValidationError("source must be a node index");
    return GridNetwork::create(std::move(segments), std::move(points), std::move(owner),
                               src.get<std::size_t>());
  });
}

std::string to_json(const RangeAssignment& assignment) {
  json ranges = json::array();
  for (double r : assignment.ranges()) ranges.push_back(r);
  return dump({{"alpha", assignment.alpha()}, {"ranges", std::move(ranges)}});
}

RangeAssignment assignment_from_json(std::string_view text) {
  const json j = parse(text);
  return guarded("assignment", [&] {
    if (!j.is_object()) throw ValidationError("assignment must be a JSON object");
    const double alpha = j.contains("alpha") ? number(j.at("alpha")) : kDefaultAlpha;
    std::vector<double> ranges;
    for (const json& r : j.at("ranges")) ranges.push_back(number(r));
    return RangeAssignment(std::move(ranges), alpha);
  });
}

NetworkKind detect_network_kind(std::string_view text) {
  const json j = parse(text);
  if (j.is_object() && j.contains("segments")) return NetworkKind::kGrid;
  if (j.is_object() && j.contains("source") && j.at("source").is_array()) {
    return NetworkKind::kCross;
  }
  throw ValidationError("not a cross or grid network file");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace crossbcast

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

#include <filesystem>
#include <string>
#include <string_view>

#include "crossbcast/assignment.hpp"
#include "crossbcast/cross_network.hpp"
#include "crossbcast/grid_network.hpp"

namespace crossbcast {

// JSON encodings. Doubles are written in shortest round-trip form, so
// write-then-read reproduces every coordinate bit for bit.
//
//   cross:      {"arm_half_length": L, "source": [x, y], "nodes": [[x, y], ...]}
//   grid:       {"segments": [[x1, y1, x2, y2], ...], "nodes": [[x, y, seg], ...],
//                "source": index}
//   assignment: {"alpha": a, "ranges": [r0, r1, ...]}
//
// In a cross file the source is node 0 and nodes[k] is node k + 1. All
// readers throw ValidationError on malformed input.

std::string to_json(const CrossNetwork& network);
CrossNetwork cross_from_json(std::string_view text,
                             CrossNetwork::Options options = CrossNetwork::Options{});

std::string to_json(const GridNetwork& grid);
GridNetwork grid_from_json(std::string_view text);

std::string to_json(const RangeAssignment& assignment);
RangeAssignment assignment_from_json(std::string_view text);

enum class NetworkKind { kCross, kGrid };

/// Tells cross files from grid files by their keys.
NetworkKind detect_network_kind(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace crossbcast

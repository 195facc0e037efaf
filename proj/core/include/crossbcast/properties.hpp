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
#include <string>
#include <vector>

namespace crossbcast {

struct PropertyOptions {
  std::uint64_t seed = 1;
  std::size_t vectors = 10'000;   // random vectors for the power superadditivity check
  std::size_t samples = 10'000;   // (range, h) pairs for coverage extents
  std::size_t networks = 300;     // random crosses for the structural checks
  std::size_t max_nodes = 24;
};

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t violations = 0;
  std::string first_violation;  // empty when none

  bool ok() const { return violations == 0; }
};

/// Randomised invariant checks over the geometry, coverage and broadcast
/// simulation. Deterministic for a given seed.
std::vector<PropertyResult> run_property_suite(const PropertyOptions& options = {});

}  // namespace crossbcast

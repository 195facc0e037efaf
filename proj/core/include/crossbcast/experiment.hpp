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
#include <string_view>
#include <vector>

namespace crossbcast {

enum class Topology { kCrossGeneral, kCrossIntersection, kSquareGrid };

std::string_view to_string(Topology t);
Topology topology_from_string(std::string_view s);

struct ExperimentConfig {
  Topology topology = Topology::kCrossGeneral;
  std::vector<std::size_t> sizes{8};
  std::size_t trials = 100;
  double alpha = 2.0;
  std::uint64_t master_seed = 1;
  std::vector<std::string> algorithms{"near-optimal", "distributed", "bip", "bip-sweep"};
  std::string denominator;  // empty: first algorithm
  double arm_half_length = 1.0;
  int grid_k = 2;
  double grid_cell = 1.0;  // cell side; the grid spans grid_k * grid_cell
  std::uint64_t budget = 10'000'000'000ULL;
  bool prune = true;  // optimal search pruning (result-identical)
  unsigned workers = 1;

  /// Throws ValidationError on an unusable config.
  void validate() const;
  const std::string& effective_denominator() const;
};

/// Reads a config; keys mirror the field names ("sizes" may also be given as
/// "N", a number or a list). Missing keys keep their defaults.
ExperimentConfig experiment_config_from_json(std::string_view text);

struct AlgoStats {
  std::string algo;
  std::size_t trials = 0;
  double mean_cost = 0.0;
  double mean_ratio = 0.0;
  double ci95 = 0.0;  // of the ratio
  double mean_runtime_seconds = 0.0;
};

struct SizeStats {
  std::size_t n = 0;
  std::vector<AlgoStats> algos;  // config order
  std::size_t dropped_trials = 0;  // budget exhausted
};

struct TrialStats {
  ExperimentConfig config;
  std::vector<SizeStats> sizes;
  bool partial = false;  // some trial ran out of search budget
};

/// Every trial depends only on (config, N, trial index); trials run on
/// `config.workers` threads and are folded in index order, so the numbers do
/// not depend on the worker count.
TrialStats run_monte_carlo(const ExperimentConfig& config);

/// topology,N,algo,trials,mean_cost,mean_ratio,ci95,denominator,seed
std::string to_csv(const TrialStats& stats);
/// Same rows as the CSV plus the partial flag. Runtimes are left out of both
/// so output is reproducible.
std::string to_json(const TrialStats& stats);

}  // namespace crossbcast

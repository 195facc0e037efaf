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

#include "crossbcast/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>

#include <json.hpp>

#include "crossbcast/errors.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/registry.hpp"
#include "crossbcast/stats.hpp"

namespace crossbcast {
namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string topology_label(const ExperimentConfig& c) {
  std::string s(to_string(c.topology));
  if (c.topology == Topology::kSquareGrid) {
    s += "-" + std::to_string(c.grid_k) + "x" + std::to_string(c.grid_k);
  }
  return s;
}

struct TrialCosts {
  std::vector<double> cost;     // per planner in run order
  std::vector<double> runtime;
  bool dropped = false;
};

}  // namespace

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::kCrossGeneral: return "cross-general";
    case Topology::kCrossIntersection: return "cross-intersection";
    case Topology::kSquareGrid: return "square-grid";
  }
  return "?";
}

Topology topology_from_string(std::string_view s) {
  if (s == "cross-general" || s == "cross") return Topology::kCrossGeneral;
  if (s == "cross-intersection") return Topology::kCrossIntersection;
  if (s == "square-grid" || s == "grid") return Topology::kSquareGrid;
  throw ValidationError("unknown topology '" + std::string(s) + "'");
}

const std::string& ExperimentConfig::effective_denominator() const {
  return denominator.empty() ? algorithms.front() : denominator;
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ValidationError("trials must be at least 1");
  if (sizes.empty()) throw ValidationError("no network sizes given");
  if (algorithms.empty()) throw ValidationError("no algorithms given");
  if (alpha < kMinAlpha || alpha > kMaxAlpha) throw ValidationError("alpha must lie in [2, 6]");
  if (!(arm_half_length > 0.0)) throw ValidationError("arm_half_length must be positive");
  const bool grid = topology == Topology::kSquareGrid;
  std::vector<std::string> all = algorithms;
  all.push_back(effective_denominator());
  for (const auto& a : all) {
    if (grid ? !is_grid_planner(a) : !is_cross_planner(a)) {
      throw ValidationError("unknown " + std::string(grid ? "grid" : "cross") + " planner '" + a +
                            "'");
    }
  }
  for (std::size_t n : sizes) {
    if (n < 2) throw ValidationError("N must be at least 2");
    if (grid && n < 2 * static_cast<std::size_t>(grid_k + 1)) {
      throw InfeasibleN("N = " + std::to_string(n) + " is below the grid's segment count");
    }
  }
  if (grid && (grid_k < 1 || !(grid_cell > 0.0))) throw ValidationError("bad grid geometry");
}

ExperimentConfig experiment_config_from_json(std::string_view text) {
  ExperimentConfig c;
  try {
    const json j = json::parse(text);
    if (!j.is_object()) throw ValidationError("config must be a JSON object");
    if (j.contains("topology")) c.topology = topology_from_string(j["topology"].get<std::string>());
    for (const char* key : {"sizes", "N"}) {
      if (!j.contains(key)) continue;
      const json& v = j[key];
      c.sizes = v.is_array() ? v.get<std::vector<std::size_t>>()
                             : std::vector<std::size_t>{v.get<std::size_t>()};
    }
    if (j.contains("trials")) c.trials = j["trials"].get<std::size_t>();
    if (j.contains("alpha")) c.alpha = j["alpha"].get<double>();
    if (j.contains("master_seed")) c.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("algorithms")) c.algorithms = j["algorithms"].get<std::vector<std::string>>();
    if (j.contains("denominator")) c.denominator = j["denominator"].get<std::string>();
    if (j.contains("arm_half_length")) c.arm_half_length = j["arm_half_length"].get<double>();
    if (j.contains("grid_k")) c.grid_k = j["grid_k"].get<int>();
    if (j.contains("grid_cell")) c.grid_cell = j["grid_cell"].get<double>();
    if (j.contains("budget")) c.budget = j["budget"].get<std::uint64_t>();
    if (j.contains("prune")) c.prune = j["prune"].get<bool>();
    if (j.contains("workers")) c.workers = j["workers"].get<unsigned>();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad experiment config: ") + e.what());
  }
  c.validate();
  return c;
}

TrialStats run_monte_carlo(const ExperimentConfig& config) {
  config.validate();
  // Planners to run: the reported ones, then the denominator if it is extra.
  std::vector<std::string> run = config.algorithms;
  const std::string& denom = config.effective_denominator();
  auto found = std::find(run.begin(), run.end(), denom);
  const std::size_t denom_slot = static_cast<std::size_t>(found - run.begin());
  if (found == run.end()) run.push_back(denom);

  PlannerOptions options;
  options.alpha = config.alpha;
  options.search.budget = config.budget;
  options.search.prune = config.prune;

  TrialStats out;
  out.config = config;
  for (std::size_t n : config.sizes) {
    auto one_trial = [&](std::size_t t) {
      TrialCosts tc;
      const std::uint64_t seed = trial_seed(config.master_seed, t);
      auto record = [&](const Plan& p) {
        if (!p.report.delivered) {
          throw std::logic_error(p.report.algo + " produced an assignment that does not deliver");
        }
        tc.cost.push_back(p.report.cost);
        tc.runtime.push_back(p.report.runtime_seconds);
      };
      try {
        if (config.topology == Topology::kSquareGrid) {
          const GridNetwork g =
              generate_square_grid(config.grid_k, config.grid_k * config.grid_cell, n, seed);
          for (const auto& a : run) record(run_planner(a, g, options));
        } else {
          const SourceMode mode = config.topology == Topology::kCrossIntersection
                                      ? SourceMode::kIntersection
                                      : SourceMode::kUniform;
          const CrossNetwork net = generate_random_cross(n, seed, config.arm_half_length, mode);
          for (const auto& a : run) record(run_planner(a, net, options));
        }
      } catch (const BudgetExceeded&) {
        tc.dropped = true;
      }
      return tc;
    };

    std::vector<TrialCosts> results(config.trials);
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto worker = [&] {
      for (std::size_t t; (t = next.fetch_add(1)) < config.trials;) {
        try {
          results[t] = one_trial(t);
        } catch (...) {
          std::lock_guard lock(failure_mu);
          if (!failure) failure = std::current_exception();
          next = config.trials;
        }
      }
    };
    {
      const unsigned workers = std::max(1u, config.workers);
      std::vector<std::jthread> pool;
      for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
      worker();
    }
    if (failure) std::rethrow_exception(failure);

    SizeStats row;
    row.n = n;
    std::vector<RunningStats> costs(config.algorithms.size()), ratios(config.algorithms.size()),
        runtimes(config.algorithms.size());
    for (const TrialCosts& tc : results) {
      if (tc.dropped) {
        ++row.dropped_trials;
        continue;
      }
      for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
        costs[a].add(tc.cost[a]);
        ratios[a].add(tc.cost[a] / tc.cost[denom_slot]);
        runtimes[a].add(tc.runtime[a]);
      }
    }
    for (std::size_t a = 0; a < config.algorithms.size(); ++a) {
      row.algos.push_back({config.algorithms[a], costs[a].count(), costs[a].mean(),
                           ratios[a].mean(), ratios[a].ci95(), runtimes[a].mean()});
    }
    out.partial = out.partial || row.dropped_trials > 0;
    out.sizes.push_back(std::move(row));
  }
  return out;
}

std::string to_csv(const TrialStats& stats) {
  const ExperimentConfig& c = stats.config;
  std::string out = "topology,N,algo,trials,mean_cost,mean_ratio,ci95,denominator,seed\n";
  for (const SizeStats& s : stats.sizes) {
    for (const AlgoStats& a : s.algos) {
      out += topology_label(c) + "," + std::to_string(s.n) + "," + a.algo + "," +
             std::to_string(a.trials) + "," + fmt(a.mean_cost) + "," + fmt(a.mean_ratio) + "," +
             fmt(a.ci95) + "," + c.effective_denominator() + "," +
             std::to_string(c.master_seed) + "\n";
    }
  }
  return out;
}

std::string to_json(const TrialStats& stats) {
  const ExperimentConfig& c = stats.config;
  json rows = json::array();
  for (const SizeStats& s : stats.sizes) {
    for (const AlgoStats& a : s.algos) {
      rows.push_back({{"topology", topology_label(c)},
                      {"N", s.n},
                      {"algo", a.algo},
                      {"trials", a.trials},
                      {"mean_cost", a.mean_cost},
                      {"mean_ratio", a.mean_ratio},
                      {"ci95", a.ci95},
                      {"denominator", c.effective_denominator()},
                      {"seed", c.master_seed}});
    }
  }
  return json({{"partial", stats.partial}, {"alpha", c.alpha}, {"rows", std::move(rows)}})
             .dump(2) +
         "\n";
}

}  // namespace crossbcast

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

// crossbcast: generate networks, plan range assignments, verify them and run
// Monte Carlo comparisons.
//
// Exit codes: 0 success, 1 invalid input (or a failed property), 2 search
// budget exhausted.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crossbcast/errors.hpp"
#include "crossbcast/experiment.hpp"
#include "crossbcast/generators.hpp"
#include "crossbcast/grid_network.hpp"
#include "crossbcast/io.hpp"
#include "crossbcast/planners.hpp"
#include "crossbcast/properties.hpp"
#include "crossbcast/registry.hpp"

namespace cb = crossbcast;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kBudget = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    cb::write_text_file(path, text);
  }
}

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  return cb::read_text_file(path);
}

std::optional<std::uint64_t> budget_from_env() {
  const char* v = std::getenv("CROSSBCAST_BUDGET");
  if (!v || !*v) return std::nullopt;
  char* end = nullptr;
  const unsigned long long b = std::strtoull(v, &end, 10);
  if (*end != '\0') throw cb::ValidationError("CROSSBCAST_BUDGET must be an integer");
  return b;
}

cb::SourceMode source_mode(const std::string& s) {
  if (s == "uniform") return cb::SourceMode::kUniform;
  if (s == "intersection") return cb::SourceMode::kIntersection;
  throw cb::ValidationError("source mode must be 'uniform' or 'intersection'");
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

json report_json(const cb::PlanReport& r) {
  return {{"algo", r.algo},
          {"cost", r.cost},
          {"runtime_seconds", r.runtime_seconds},
          {"iterations", r.iterations},
          {"delivered", r.delivered}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-energy broadcast range assignment on cross and grid networks"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Draw a random cross network");
  std::size_t gen_n = 10;
  std::uint64_t gen_seed = 1;
  double gen_arm = 1.0;
  std::string gen_mode = "uniform", gen_out;
  gen->add_option("-N,--nodes", gen_n, "Number of nodes including the source")->required();
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--arm", gen_arm, "Arm half-length");
  gen->add_option("--source-mode", gen_mode, "uniform | intersection");
  gen->add_option("-o,--out", gen_out, "Output file (default stdout)");

  // grid-gen
  auto* ggen = app.add_subcommand("grid-gen", "Draw a random square grid network");
  int ggen_k = 2;
  double ggen_cell = 1.0;
  std::size_t ggen_n = 40;
  std::uint64_t ggen_seed = 1;
  std::string ggen_out;
  ggen->add_option("-k", ggen_k, "Cells per side");
  ggen->add_option("--cell", ggen_cell, "Cell side length");
  ggen->add_option("-N,--nodes", ggen_n, "Number of nodes")->required();
  ggen->add_option("--seed", ggen_seed, "Random seed");
  ggen->add_option("-o,--out", ggen_out, "Output file (default stdout)");

  // assign
  auto* assign = app.add_subcommand("assign", "Compute a range assignment");
  std::string as_algo, as_in = "-", as_out, as_report;
  double as_alpha = cb::kDefaultAlpha;
  std::uint64_t as_budget = cb::kDefaultSearchBudget;
  unsigned as_threads = 1;
  bool as_no_prune = false;
  std::size_t as_brute_cap = 8;
  assign->add_option("--algo", as_algo, "Planner name")->required();
  assign->add_option("--alpha", as_alpha, "Path-loss exponent in [2, 6]");
  assign->add_option("-i,--in", as_in, "Network file (default stdin)");
  assign->add_option("-o,--out", as_out, "Assignment output (default stdout)");
  assign->add_option("--report", as_report, "Report output (default stderr)");
  assign->add_option("--budget", as_budget, "Optimal search budget in node visits");
  assign->add_option("--threads", as_threads, "Optimal search threads");
  assign->add_flag("--no-prune", as_no_prune, "Run the optimal search without pruning");
  assign->add_option("--brute-cap", as_brute_cap, "Largest N the brute-force oracle accepts");

  // verify
  auto* verify = app.add_subcommand("verify", "Simulate a broadcast for an assignment");
  std::string ve_net, ve_asg;
  verify->add_option("-n,--network", ve_net, "Network file")->required();
  verify->add_option("-a,--assignment", ve_asg, "Assignment file")->required();

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo comparison of planners");
  std::string mc_config, mc_sizes, mc_algos, mc_denom, mc_topology, mc_csv, mc_json;
  std::optional<std::size_t> mc_trials;
  std::optional<double> mc_alpha, mc_arm;
  std::optional<std::uint64_t> mc_seed, mc_budget;
  std::optional<unsigned> mc_workers;
  std::optional<int> mc_k;
  bool mc_no_prune = false;
  mc->add_option("--config", mc_config, "Experiment config JSON; flags override it");
  mc->add_option("-N,--sizes", mc_sizes, "Comma-separated network sizes");
  mc->add_option("--trials", mc_trials, "Trials per size");
  mc->add_option("--algos", mc_algos, "Comma-separated planner names");
  mc->add_option("--denominator", mc_denom, "Planner used to normalise costs");
  mc->add_option("--topology", mc_topology, "cross-general | cross-intersection | square-grid");
  mc->add_option("--alpha", mc_alpha, "Path-loss exponent");
  mc->add_option("--arm", mc_arm, "Cross arm half-length");
  mc->add_option("--seed", mc_seed, "Master seed");
  mc->add_option("--budget", mc_budget, "Optimal search budget");
  mc->add_option("--workers", mc_workers, "Worker threads");
  mc->add_option("-k,--grid-k", mc_k, "Grid cells per side");
  mc->add_flag("--no-prune", mc_no_prune, "Disable optimal search pruning");
  mc->add_option("--csv", mc_csv, "CSV output (default stdout)");
  mc->add_option("--json", mc_json, "JSON output");

  // props
  auto* props = app.add_subcommand("props", "Run the randomised invariant suite");
  cb::PropertyOptions po;
  props->add_option("--seed", po.seed, "Random seed");
  props->add_option("--vectors", po.vectors, "Vectors for the power inequality");
  props->add_option("--samples", po.samples, "Samples for coverage extents");
  props->add_option("--networks", po.networks, "Random networks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    const std::optional<std::uint64_t> env_budget = budget_from_env();

    if (*gen) {
      const auto net = cb::generate_random_cross(gen_n, gen_seed, gen_arm, source_mode(gen_mode));
      emit(gen_out, cb::to_json(net));
      return kOk;
    }
    if (*ggen) {
      const auto g = cb::generate_square_grid(ggen_k, ggen_k * ggen_cell, ggen_n, ggen_seed);
      emit(ggen_out, cb::to_json(g));
      return kOk;
    }
    if (*assign) {
      cb::PlannerOptions opt;
      opt.alpha = as_alpha;
      opt.search.budget = env_budget.value_or(as_budget);
      opt.search.prune = !as_no_prune;
      opt.search.threads = as_threads;
      opt.brute.max_nodes = as_brute_cap;
      const std::string text = slurp(as_in);
      const cb::Plan plan =
          cb::detect_network_kind(text) == cb::NetworkKind::kGrid
              ? cb::run_planner(as_algo, cb::grid_from_json(text), opt)
              : cb::run_planner(as_algo, cb::cross_from_json(text), opt);
      emit(as_out, cb::to_json(plan.assignment));
      const std::string rep = report_json(plan.report).dump(2) + "\n";
      if (as_report.empty()) std::cerr << rep;
      else emit(as_report, rep);
      return kOk;
    }
    if (*verify) {
      const std::string text = cb::read_text_file(ve_net);
      const cb::Placement placement = cb::detect_network_kind(text) == cb::NetworkKind::kGrid
                                          ? cb::grid_from_json(text).placement()
                                          : cb::cross_from_json(text).placement();
      const cb::RangeAssignment a = cb::assignment_from_json(cb::read_text_file(ve_asg));
      const cb::BroadcastOutcome out = cb::simulate_broadcast(placement, a.ranges());
      std::cout << json({{"delivered", out.delivered()},
                         {"cost", cb::cost(a)},
                         {"reached", out.reached_count},
                         {"nodes", placement.size()},
                         {"rounds", out.rounds}})
                       .dump(2)
                << "\n";
      return kOk;
    }
    if (*mc) {
      cb::ExperimentConfig c;
      if (!mc_config.empty()) c = cb::experiment_config_from_json(cb::read_text_file(mc_config));
      if (!mc_topology.empty()) c.topology = cb::topology_from_string(mc_topology);
      if (!mc_sizes.empty()) {
        c.sizes.clear();
        for (const auto& s : split_list(mc_sizes)) c.sizes.push_back(std::stoul(s));
      }
      if (!mc_algos.empty()) c.algorithms = split_list(mc_algos);
      if (!mc_denom.empty()) c.denominator = mc_denom;
      if (mc_trials) c.trials = *mc_trials;
      if (mc_alpha) c.alpha = *mc_alpha;
      if (mc_arm) c.arm_half_length = *mc_arm;
      if (mc_seed) c.master_seed = *mc_seed;
      if (mc_budget) c.budget = *mc_budget;
      if (mc_workers) c.workers = *mc_workers;
      if (mc_k) c.grid_k = *mc_k;
      if (mc_no_prune) c.prune = false;
      if (env_budget) c.budget = *env_budget;

      const cb::TrialStats stats = cb::run_monte_carlo(c);
      emit(mc_csv, cb::to_csv(stats));
      if (!mc_json.empty()) emit(mc_json, cb::to_json(stats));
      for (const auto& s : stats.sizes) {
        for (const auto& a : s.algos) {
          std::cerr << "N=" << s.n << " " << a.algo << " mean_runtime=" << a.mean_runtime_seconds
                    << "s\n";
        }
        if (s.dropped_trials > 0) {
          std::cerr << "N=" << s.n << ": " << s.dropped_trials
                    << " trial(s) dropped, search budget exhausted\n";
        }
      }
      return stats.partial ? kBudget : kOk;
    }
    if (*props) {
      bool ok = true;
      for (const cb::PropertyResult& r : cb::run_property_suite(po)) {
        std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, "
                  << r.violations << " violations";
        if (!r.ok()) std::cout << " (first: " << r.first_violation << ")";
        std::cout << "\n";
        ok = ok && r.ok();
      }
      return ok ? kOk : kInvalid;
    }
  } catch (const cb::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const cb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: bad number: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}

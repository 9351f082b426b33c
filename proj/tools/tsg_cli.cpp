// Experiment harness for the task-selection solver library: generate random
// scenarios, solve one scheme on one scenario, run replicated sweeps, or emit
// the bundled real-world example.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tsg/adts.hpp"
#include "tsg/baselines.hpp"
#include "tsg/experiment.hpp"
#include "tsg/scenario_gen.hpp"
#include "tsg/scenario_io.hpp"

namespace {

void print_report(const tsg::RunReport& rep) {
  std::cout << "scheme: " << rep.scheme << "\n";
  std::cout << "payoffs:";
  for (double u : rep.payoffs) std::cout << ' ' << u;
  std::cout << "\navg_payoff: " << rep.avg_payoff << "\n";
  std::cout << "jain: " << rep.jain << (rep.jain_all_zero ? " (all-zero payoffs)" : "") << "\n";
  std::cout << "coverage: " << rep.coverage << "\n";
  if (rep.reward_per_measurement)
    std::cout << "reward_per_measurement: " << *rep.reward_per_measurement << "\n";
  else
    std::cout << "reward_per_measurement: undefined (no measurements)\n";
  std::cout << "surplus: " << rep.surplus << "\n";
  if (rep.iterations_to_converge)
    std::cout << "iterations_to_converge: " << *rep.iterations_to_converge << "\n";
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Time-sensitive task-selection games: solvers and experiments"};
  app.require_subcommand(1);

  // ---- generate ----
  auto* gen = app.add_subcommand("generate", "Generate a random scenario file");
  tsg::GenConfig gen_config;
  std::string gen_out;
  double gen_cmove = 0.1;
  std::vector<double> gen_rewards;
  gen->add_option("--out", gen_out, "Output scenario file")->required();
  gen->add_option("--seed", gen_config.seed, "Generation seed")->required();
  gen->add_option("--users", gen_config.num_users, "Number of users I");
  gen->add_option("--tasks", gen_config.num_tasks, "Number of tasks K");
  gen->add_option("--horizon", gen_config.horizon, "Number of time slots T");
  gen->add_option("--locations", gen_config.num_locations,
                  "Number of shared locations L (0 = one per task/user)");
  gen->add_option("--region", gen_config.region_km, "Region side length in km");
  gen->add_option("--rewards", gen_rewards, "Reward levels");
  gen->add_option("--reputation-levels", gen_config.reputation_levels, "Reputation levels");
  gen->add_option("--cmove", gen_cmove, "Movement cost coefficient per km");
  gen->add_option("--speed", gen_config.speed, "Movement speed km/min");
  gen->add_option("--slot", gen_config.slot_minutes, "Slot length in minutes");

  // ---- solve ----
  auto* solve = app.add_subcommand("solve", "Run one scheme on one scenario");
  std::string solve_scenario, solve_scheme;
  std::string solve_trace, solve_alloc, solve_graph, solve_report;
  std::uint64_t solve_seed = 1;
  tsg::AdtsConfig solve_adts;
  std::string solve_order = "round_robin";
  int solve_workers = 0;
  bool solve_unrestricted = false;
  solve->add_option("--scenario", solve_scenario, "Scenario file")->required();
  solve->add_option("--scheme", solve_scheme, "adts | gc | gd | cta")->required();
  solve->add_option("--seed", solve_seed, "Seed (adts random order)");
  solve->add_option("--order", solve_order, "adts update order: round_robin | random");
  solve->add_option("--tau-max", solve_adts.tau_max, "adts iteration cap (passes)");
  solve->add_option("--epsilon", solve_adts.epsilon, "adts improvement threshold");
  solve->add_option("--workers", solve_workers, "cta worker threads (0 = all, 1 = serial)");
  solve->add_flag("--unrestricted", solve_unrestricted,
                  "cta: allow multiple users per task in the search");
  solve->add_option("--trace", solve_trace, "Write the adts iteration trace here");
  solve->add_option("--allocation-out", solve_alloc, "Write the task allocation here");
  solve->add_option("--dump-split-graph", solve_graph,
                    "USER:FILE — write one user's split route graph as DOT");
  solve->add_option("--report", solve_report, "Append the run as a CSV row here");

  // ---- experiment ----
  auto* exp = app.add_subcommand("experiment", "Run a replicated sweep from a spec file");
  std::string exp_spec_path, exp_out;
  std::uint64_t exp_seed = 0;
  int exp_threads = 0;
  exp->add_option("--spec", exp_spec_path, "Experiment spec (JSON)")->required();
  exp->add_option("--seed", exp_seed, "Master seed")->required();
  exp->add_option("--out", exp_out, "Results file (overrides the spec's output_path)");
  exp->add_option("--threads", exp_threads, "Worker threads (0 = all, 1 = serial)");

  // ---- fixture ----
  auto* fix = app.add_subcommand("fixture", "Emit the bundled real-world example");
  std::string fix_dir = ".";
  fix->add_option("--out-dir", fix_dir, "Directory for the fixture files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      if (!gen_rewards.empty()) {
        gen_config.reward_levels.clear();
        for (double v : gen_rewards) gen_config.reward_levels.push_back(tsg::Money::from_double(v));
      }
      gen_config.cost_coefficient = tsg::Money::from_double(gen_cmove);
      tsg::write_scenario_file(gen_out, tsg::generate(gen_config));
      std::cout << "wrote " << gen_out << "\n";
    } else if (*solve) {
      const tsg::Scenario scenario = tsg::read_scenario_file(solve_scenario);
      if (!scenario.triangle_ok()) {
        std::cerr << "warning: scenario violates the movement-cost triangle property ("
                  << scenario.triangle_violations().size() << " triples)\n";
      }
      const tsg::Scheme scheme = tsg::scheme_from_string(solve_scheme);
      solve_adts.seed = solve_seed;
      if (solve_order == "random")
        solve_adts.order = tsg::UpdateOrder::random;
      else if (solve_order != "round_robin")
        throw std::invalid_argument("unknown --order " + solve_order);

      tsg::RunReport report;
      if (scheme == tsg::Scheme::adts) {
        tsg::AdtsTrace trace = tsg::run_adts(scenario, solve_adts);
        report = tsg::make_report(scenario, trace.final_profile, "adts", solve_seed,
                                  trace.last_applied_iteration);
        std::cout << (trace.converged ? "converged" : "hit iteration cap") << " after "
                  << trace.iterations.size() << " iterations (last update at "
                  << trace.last_applied_iteration << ")\n";
        if (!solve_trace.empty()) {
          auto out = open_out(solve_trace);
          tsg::write_trace(out, trace);
        }
        if (!solve_alloc.empty()) {
          auto out = open_out(solve_alloc);
          tsg::write_allocation(out, scenario,
                                tsg::allocation_from_profile(scenario, trace.final_profile));
        }
      } else if (scheme == tsg::Scheme::gc || scheme == tsg::Scheme::cta) {
        tsg::Allocation alloc =
            scheme == tsg::Scheme::gc
                ? tsg::greedy_centralized(scenario)
                : tsg::exact_cta(scenario,
                                 solve_unrestricted ? tsg::CtaMode::unrestricted
                                                    : tsg::CtaMode::pruned,
                                 solve_workers)
                      .allocation;
        report = tsg::make_report(scenario, tsg::induced_profile(scenario, alloc),
                                  tsg::to_string(scheme), solve_seed);
        if (!solve_alloc.empty()) {
          auto out = open_out(solve_alloc);
          tsg::write_allocation(out, scenario, alloc);
        }
      } else {
        tsg::StrategyProfile profile = tsg::greedy_distributed(scenario);
        report = tsg::make_report(scenario, profile, "gd", solve_seed);
        if (!solve_alloc.empty()) {
          auto out = open_out(solve_alloc);
          tsg::write_allocation(out, scenario, tsg::allocation_from_profile(scenario, profile));
        }
      }
      if (!solve_graph.empty()) {
        const auto colon = solve_graph.find(':');
        if (colon == std::string::npos)
          throw std::invalid_argument("--dump-split-graph expects USER:FILE");
        const int user = std::stoi(solve_graph.substr(0, colon));
        auto out = open_out(solve_graph.substr(colon + 1));
        tsg::write_dot(out, tsg::build_split_graph(tsg::build_route_graph(
                                scenario, user, tsg::RewardShares(scenario.num_tasks()))));
      }
      print_report(report);
      if (!solve_report.empty()) {
        tsg::ExperimentSpec one;
        one.sweep_var = "I";
        auto out = open_out(solve_report);
        tsg::write_results_csv(
            out, one,
            {{static_cast<double>(scenario.num_users()), 0, solve_seed, report}});
      }
    } else if (*exp) {
      tsg::ExperimentSpec spec = tsg::read_experiment_spec_file(exp_spec_path);
      spec.master_seed = exp_seed;
      if (!exp_out.empty()) spec.output_path = exp_out;
      if (spec.output_path.empty())
        throw std::invalid_argument("no output path (set output_path in the spec or pass --out)");
      spec.threads = exp_threads;
      const auto rows = tsg::run_experiment(spec);
      auto out = open_out(spec.output_path);
      tsg::write_results_csv(out, spec, rows);
      std::cout << "wrote " << rows.size() << " rows to " << spec.output_path << "\n";
    } else if (*fix) {
      const tsg::Scenario scenario = tsg::real_world_fixture();
      tsg::write_scenario_file(fix_dir + "/realworld_scenario.json", scenario);
      auto out = open_out(fix_dir + "/realworld_movement.tsv");
      tsg::write_movement_doc(out, tsg::real_world_movement_doc());
      std::cout << "wrote " << fix_dir << "/realworld_scenario.json and "
                << fix_dir << "/realworld_movement.tsv\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "tsg/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "tsg/baselines.hpp"
#include "tsg/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsg {

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::adts: return "adts";
    case Scheme::gc: return "gc";
    case Scheme::gd: return "gd";
    case Scheme::cta: return "cta";
  }
  return "?";
}

Scheme scheme_from_string(const std::string& name) {
  if (name == "adts") return Scheme::adts;
  if (name == "gc") return Scheme::gc;
  if (name == "gd") return Scheme::gd;
  if (name == "cta") return Scheme::cta;
  throw std::invalid_argument("unknown scheme '" + name + "' (expected adts, gc, gd or cta)");
}

GenConfig apply_sweep(const GenConfig& base, const std::string& var, double value) {
  GenConfig c = base;
  if (var == "I")
    c.num_users = static_cast<int>(std::llround(value));
  else if (var == "c_move")
    c.cost_coefficient = Money::from_double(value);
  else if (var == "speed")
    c.speed = value;
  else
    throw std::invalid_argument("unknown sweep variable '" + var + "' (expected I, c_move or speed)");
  return c;
}

RunReport run_scheme(const Scenario& s, Scheme scheme, std::uint64_t seed,
                     const AdtsConfig& adts) {
  switch (scheme) {
    case Scheme::adts: {
      AdtsConfig cfg = adts;
      cfg.seed = seed;
      AdtsTrace trace = run_adts(s, cfg);
      return make_report(s, trace.final_profile, "adts", seed, trace.last_applied_iteration);
    }
    case Scheme::gc:
      return make_report(s, induced_profile(s, greedy_centralized(s)), "gc", seed);
    case Scheme::gd:
      return make_report(s, greedy_distributed(s), "gd", seed);
    case Scheme::cta: {
      CtaResult r = exact_cta(s, CtaMode::pruned);
      return make_report(s, induced_profile(s, r.allocation), "cta", seed);
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<ResultRow> run_experiment(const ExperimentSpec& spec) {
  if (spec.replications < 1) throw std::invalid_argument("replications must be at least 1");
  if (spec.sweep_values.empty()) throw std::invalid_argument("sweep value list is empty");
  if (spec.schemes.empty()) throw std::invalid_argument("no schemes selected");

  // Fail fast when cta would exceed its guard anywhere in the sweep.
  for (Scheme sch : spec.schemes) {
    if (sch != Scheme::cta) continue;
    for (double v : spec.sweep_values) {
      const GenConfig c = apply_sweep(spec.base, spec.sweep_var, v);
      if (std::pow(static_cast<double>(c.num_users) + 1, c.num_tasks) > 1e7)
        throw std::runtime_error("cta requested but instance (I=" + std::to_string(c.num_users) +
                                 ", K=" + std::to_string(c.num_tasks) +
                                 ") is too large for exact solve");
    }
  }

  const int V = static_cast<int>(spec.sweep_values.size());
  const int R = spec.replications;
  const int cells = V * R;
  std::vector<std::vector<RunReport>> grid(static_cast<std::size_t>(cells));
  std::vector<std::uint64_t> seeds(static_cast<std::size_t>(cells));

#ifdef _OPENMP
  const int threads = spec.threads == 0 ? omp_get_max_threads() : spec.threads;
#else
  const int threads = 1;
#endif

#pragma omp parallel for schedule(dynamic) num_threads(threads) if (threads > 1)
  for (int cell = 0; cell < cells; ++cell) {
    const int vi = cell / R;
    const int rep = cell % R;
    const std::uint64_t seed = derive_seed(spec.master_seed, static_cast<std::uint64_t>(vi),
                                           static_cast<std::uint64_t>(rep));
    seeds[static_cast<std::size_t>(cell)] = seed;
    GenConfig config = apply_sweep(spec.base, spec.sweep_var, spec.sweep_values[static_cast<std::size_t>(vi)]);
    config.seed = seed;
    const Scenario scenario = generate(config);
    std::vector<RunReport>& reports = grid[static_cast<std::size_t>(cell)];
    reports.reserve(spec.schemes.size());
    for (Scheme sch : spec.schemes) reports.push_back(run_scheme(scenario, sch, seed, spec.adts));
  }

  std::vector<ResultRow> rows;
  rows.reserve(static_cast<std::size_t>(cells) * spec.schemes.size() +
               static_cast<std::size_t>(V) * spec.schemes.size());
  for (int vi = 0; vi < V; ++vi)
    for (int rep = 0; rep < R; ++rep) {
      const int cell = vi * R + rep;
      for (std::size_t si = 0; si < spec.schemes.size(); ++si)
        rows.push_back({spec.sweep_values[static_cast<std::size_t>(vi)], rep,
                        seeds[static_cast<std::size_t>(cell)],
                        grid[static_cast<std::size_t>(cell)][si]});
    }

  // Per-sweep-value means; reward_per_measurement averages over defined cells.
  for (int vi = 0; vi < V; ++vi)
    for (std::size_t si = 0; si < spec.schemes.size(); ++si) {
      RunReport mean;
      mean.scheme = to_string(spec.schemes[si]);
      int rpm_count = 0;
      double rpm_sum = 0.0;
      long iter_sum = 0;
      int iter_count = 0;
      for (int rep = 0; rep < R; ++rep) {
        const RunReport& r = grid[static_cast<std::size_t>(vi * R + rep)][si];
        mean.avg_payoff += r.avg_payoff;
        mean.jain += r.jain;
        mean.coverage += r.coverage;
        mean.surplus += r.surplus;
        if (r.reward_per_measurement) {
          rpm_sum += *r.reward_per_measurement;
          ++rpm_count;
        }
        if (r.iterations_to_converge) {
          iter_sum += *r.iterations_to_converge;
          ++iter_count;
        }
      }
      mean.avg_payoff /= R;
      mean.jain /= R;
      mean.coverage /= R;
      mean.surplus /= R;
      if (rpm_count > 0) mean.reward_per_measurement = rpm_sum / rpm_count;
      if (iter_count > 0)
        mean.iterations_to_converge = static_cast<int>(iter_sum / iter_count);
      rows.push_back({spec.sweep_values[static_cast<std::size_t>(vi)], -1, 0, mean});
    }
  return rows;
}

void write_results_csv(std::ostream& out, const ExperimentSpec& spec,
                       const std::vector<ResultRow>& rows) {
  out << "sweep_var,sweep_value,replication,seed,scheme,avg_payoff,jain,coverage,"
         "reward_per_measurement,surplus,iterations_to_converge\n";
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return std::string(buf);
  };
  for (const ResultRow& r : rows) {
    out << spec.sweep_var << ',' << num(r.sweep_value) << ',';
    if (r.replication < 0)
      out << "mean,,";
    else
      out << r.replication << ',' << r.seed << ',';
    out << r.report.scheme << ',' << num(r.report.avg_payoff) << ',' << num(r.report.jain) << ','
        << num(r.report.coverage) << ',';
    if (r.report.reward_per_measurement) out << num(*r.report.reward_per_measurement);
    out << ',' << num(r.report.surplus) << ',';
    if (r.report.iterations_to_converge) out << *r.report.iterations_to_converge;
    out << '\n';
  }
}

ExperimentSpec read_experiment_spec(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("experiment spec: ") + e.what());
  }
  ExperimentSpec spec;
  spec.sweep_var = j.at("sweep_var").get<std::string>();
  spec.sweep_values = j.at("sweep_values").get<std::vector<double>>();
  if (j.contains("replications")) spec.replications = j["replications"].get<int>();
  for (const auto& name : j.at("schemes"))
    spec.schemes.push_back(scheme_from_string(name.get<std::string>()));
  if (j.contains("output_path")) spec.output_path = j["output_path"].get<std::string>();
  if (j.contains("master_seed")) spec.master_seed = j["master_seed"].get<std::uint64_t>();

  if (j.contains("base")) {
    const auto& b = j["base"];
    GenConfig& c = spec.base;
    if (b.contains("I")) c.num_users = b["I"].get<int>();
    if (b.contains("K")) c.num_tasks = b["K"].get<int>();
    if (b.contains("T")) c.horizon = b["T"].get<int>();
    if (b.contains("L")) c.num_locations = b["L"].get<int>();
    if (b.contains("region_km")) c.region_km = b["region_km"].get<double>();
    if (b.contains("reward_levels")) {
      c.reward_levels.clear();
      for (const auto& v : b["reward_levels"])
        c.reward_levels.push_back(Money::from_double(v.get<double>()));
    }
    if (b.contains("reputation_levels")) c.reputation_levels = b["reputation_levels"].get<int>();
    if (b.contains("c_move")) c.cost_coefficient = Money::from_double(b["c_move"].get<double>());
    if (b.contains("speed")) c.speed = b["speed"].get<double>();
    if (b.contains("slot_length")) c.slot_minutes = b["slot_length"].get<double>();
  }
  if (j.contains("adts")) {
    const auto& a = j["adts"];
    if (a.contains("tau_max")) spec.adts.tau_max = a["tau_max"].get<int>();
    if (a.contains("epsilon")) spec.adts.epsilon = a["epsilon"].get<double>();
    if (a.contains("update_order")) {
      const std::string o = a["update_order"].get<std::string>();
      if (o == "round_robin")
        spec.adts.order = UpdateOrder::round_robin;
      else if (o == "random")
        spec.adts.order = UpdateOrder::random;
      else
        throw std::invalid_argument("experiment spec: unknown update_order '" + o + "'");
    }
  }
  return spec;
}

ExperimentSpec read_experiment_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open experiment spec " + path);
  return read_experiment_spec(in);
}

}  // namespace tsg

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsg/adts.hpp"
#include "tsg/metrics.hpp"
#include "tsg/scenario_gen.hpp"

namespace tsg {

enum class Scheme { adts, gc, gd, cta };

std::string to_string(Scheme s);
Scheme scheme_from_string(const std::string& name);

// Sweep description: one variable, a value list, a base configuration and the
// replication count. Every cell (sweep value x replication) runs each scheme
// on a scenario generated from a seed derived deterministically from the
// master seed and the cell coordinates.
struct ExperimentSpec {
  std::string sweep_var = "I";          // "I", "c_move" or "speed"
  std::vector<double> sweep_values;
  GenConfig base;
  int replications = 100;
  std::vector<Scheme> schemes;
  std::string output_path;
  std::uint64_t master_seed = 0;
  AdtsConfig adts;
  int threads = 0;                      // 0 = all available, 1 = serial reference
};

struct ResultRow {
  double sweep_value = 0.0;
  int replication = 0;                  // -1 marks a per-sweep-value mean row
  std::uint64_t seed = 0;
  RunReport report;
};

// Runs the grid and returns per-cell rows followed by per-sweep-value means,
// in deterministic (sweep, replication, scheme) order regardless of thread
// count. Checks instance-size guards for the cta scheme before any run.
std::vector<ResultRow> run_experiment(const ExperimentSpec& spec);

// Delimited text, one header row; missing values are empty fields.
void write_results_csv(std::ostream& out, const ExperimentSpec& spec,
                       const std::vector<ResultRow>& rows);

// Applies one sweep value to the base configuration.
GenConfig apply_sweep(const GenConfig& base, const std::string& var, double value);

// Runs one scheme on one scenario. The ADTS config's seed should already be
// cell-specific when determinism matters.
RunReport run_scheme(const Scenario& s, Scheme scheme, std::uint64_t seed,
                     const AdtsConfig& adts);

// JSON (de)serialization of the spec for the CLI.
ExperimentSpec read_experiment_spec(std::istream& in);
ExperimentSpec read_experiment_spec_file(const std::string& path);

}  // namespace tsg

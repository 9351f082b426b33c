#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tsg/central.hpp"

namespace tsg {

// Jain's fairness index (sum U)^2 / (I * sum U^2); 1 under equal payoffs.
// An all-zero vector is defined as perfectly fair (1) to avoid 0/0.
double jain_index(const std::vector<double>& payoffs);

// Fraction of tasks with at least one user visiting the execution-time point.
double coverage(const Scenario& s, const StrategyProfile& profile);
double coverage(const Scenario& s, const Allocation& allocation);

// Total disbursed reward divided by the number of (user, task) measurement
// pairs; a task worked by m users counts m measurements sharing its reward
// once. Throws when there is no measurement at all.
double reward_per_measurement(const Scenario& s, const StrategyProfile& profile);

// Per-scheme outcome of one run.
struct RunReport {
  std::string scheme;
  std::uint64_t seed = 0;
  std::vector<double> payoffs;
  double avg_payoff = 0.0;
  double jain = 0.0;
  bool jain_all_zero = false;          // index defined by convention, flagged
  double coverage = 0.0;
  std::optional<double> reward_per_measurement;  // absent when nothing measured
  double surplus = 0.0;
  std::optional<int> iterations_to_converge;     // ADTS only

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

RunReport make_report(const Scenario& s, const StrategyProfile& profile,
                      const std::string& scheme, std::uint64_t seed,
                      std::optional<int> iterations = std::nullopt);

}  // namespace tsg

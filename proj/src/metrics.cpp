#include "tsg/metrics.hpp"

#include <stdexcept>

namespace tsg {

double jain_index(const std::vector<double>& payoffs) {
  double sum = 0.0, sum_sq = 0.0;
  for (double u : payoffs) {
    sum += u;
    sum_sq += u * u;
  }
  if (sum_sq == 0.0) return 1.0;
  return sum * sum / (static_cast<double>(payoffs.size()) * sum_sq);
}

double coverage(const Scenario& s, const StrategyProfile& profile) {
  int covered = 0;
  for (int k = 1; k <= s.num_tasks(); ++k)
    if (profile.share({k, s.task(k).execution_time}) >= 1) ++covered;
  return static_cast<double>(covered) / s.num_tasks();
}

double coverage(const Scenario& s, const Allocation& allocation) {
  int covered = 0;
  for (int k = 1; k <= s.num_tasks(); ++k)
    if (allocation.assignee(k) != -1) ++covered;
  return static_cast<double>(covered) / s.num_tasks();
}

double reward_per_measurement(const Scenario& s, const StrategyProfile& profile) {
  Money disbursed;
  long measurements = 0;
  for (int k = 1; k <= s.num_tasks(); ++k) {
    const int m = profile.share({k, s.task(k).execution_time});
    if (m >= 1) {
      disbursed += s.task(k).reward;
      measurements += m;
    }
  }
  if (measurements == 0)
    throw std::domain_error("reward per measurement is undefined without measurements");
  return disbursed.to_double() / static_cast<double>(measurements);
}

RunReport make_report(const Scenario& s, const StrategyProfile& profile,
                      const std::string& scheme, std::uint64_t seed,
                      std::optional<int> iterations) {
  RunReport rep;
  rep.scheme = scheme;
  rep.seed = seed;
  rep.payoffs.reserve(static_cast<std::size_t>(s.num_users()));
  double sum_sq = 0.0;
  for (int i = 1; i <= s.num_users(); ++i) {
    rep.payoffs.push_back(payoff(s, profile, i));
    rep.avg_payoff += rep.payoffs.back();
    sum_sq += rep.payoffs.back() * rep.payoffs.back();
  }
  rep.avg_payoff /= s.num_users();
  rep.jain = jain_index(rep.payoffs);
  rep.jain_all_zero = sum_sq == 0.0;
  rep.coverage = coverage(s, profile);
  bool any_measurement = false;
  for (int k = 1; k <= s.num_tasks() && !any_measurement; ++k)
    any_measurement = profile.share({k, s.task(k).execution_time}) >= 1;
  if (any_measurement) rep.reward_per_measurement = reward_per_measurement(s, profile);
  rep.surplus = surplus(s, profile).surplus.to_double();
  rep.iterations_to_converge = iterations;
  return rep;
}

}  // namespace tsg

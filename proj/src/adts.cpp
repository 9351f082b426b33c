#include "tsg/adts.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "tsg/rng.hpp"

namespace tsg {

RewardShares ClaimBoard::aggregates() const {
  RewardShares out(num_tasks_);
  for (int k = 1; k <= num_tasks_; ++k) out.add(k, aggregate(k));
  return out;
}

RewardShares ClaimBoard::excluding(int user_id) const {
  RewardShares out = aggregates();
  for (int k = 1; k <= num_tasks_; ++k)
    if (own_claim(user_id, k)) out.add(k, -1);
  return out;
}

void apply_claim_update(ClaimBoard& board, const Scenario& s, int user_id, const Route& route) {
  for (int k = 1; k <= board.num_tasks_; ++k) board.claim_at(user_id, k) = 0;
  for (const TaskTimePoint& p : route.points)
    if (s.rewarded(p)) board.claim_at(user_id, p.task) = 1;
  // provider side: recompute the aggregates from all reported claims
  for (int k = 1; k <= board.num_tasks_; ++k) {
    int q = 0;
    for (std::size_t i = 0; i < board.claims_.size() / board.num_tasks_; ++i)
      q += board.claims_[i * board.num_tasks_ + (k - 1)];
    board.aggregate_[static_cast<std::size_t>(k)] = q;
  }
}

AdtsTrace run_adts(const Scenario& s, const AdtsConfig& config) {
  if (config.tau_max < 1) throw std::invalid_argument("tau_max must be at least 1");
  const int I = s.num_users();
  AdtsTrace trace;
  trace.final_profile = StrategyProfile::all_stay_home(s);
  StrategyProfile& profile = trace.final_profile;
  ClaimBoard board(s);
  std::mt19937_64 rng(config.seed);

  // A user is "stable" once her best response was checked and not applied
  // since the most recent applied update; quiescence = everyone stable.
  std::vector<char> stable(static_cast<std::size_t>(I) + 1, 0);
  int stable_count = 0;

  const long cap = static_cast<long>(config.tau_max) * I;
  for (long iter = 1; iter <= cap && stable_count < I; ++iter) {
    const int user = config.order == UpdateOrder::round_robin
                         ? static_cast<int>((iter - 1) % I) + 1
                         : 1 + static_cast<int>(uniform_index(rng, static_cast<std::uint64_t>(I)));
    board.tick();

    const RewardShares others = board.excluding(user);
    const double current = payoff_against(s, profile.route(user), others);
    BestResponse br = best_response(s, user, others);

    AdtsIterationRecord rec;
    rec.iteration = static_cast<int>(iter);
    rec.user = user;
    rec.old_payoff = current;
    if (br.payoff > current + config.epsilon) {
      profile.set_route(s, br.route);
      apply_claim_update(board, s, user, profile.route(user));
      rec.new_payoff = br.payoff;
      rec.applied = true;
      trace.last_applied_iteration = static_cast<int>(iter);
      std::fill(stable.begin(), stable.end(), 0);
      stable_count = 0;
    } else {
      rec.new_payoff = current;
    }
    if (!stable[static_cast<std::size_t>(user)]) {
      stable[static_cast<std::size_t>(user)] = 1;
      ++stable_count;
    }
    rec.potential = potential(s, profile);
    trace.iterations.push_back(rec);
  }

  trace.converged = stable_count == I;
  trace.passes_to_converge = (trace.last_applied_iteration + I - 1) / I;
  return trace;
}

void write_trace(std::ostream& out, const AdtsTrace& trace) {
  out << "# iteration\tuser\tpayoff_delta\tpotential\n";
  char buf[96];
  for (const auto& r : trace.iterations) {
    std::snprintf(buf, sizeof(buf), "%d\t%d\t%.9f\t%.9f\n", r.iteration, r.user,
                  r.new_payoff - r.old_payoff, r.potential);
    out << buf;
  }
}

}  // namespace tsg

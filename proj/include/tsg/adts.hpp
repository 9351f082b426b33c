#pragma once

#include <cstdint>
#include <iosfwd>

#include "tsg/game.hpp"

namespace tsg {

// Provider-side board of task claims. Users report which rewarded points
// their plan covers; the board exposes only aggregates plus a user's own
// claims, never routes, which is the whole privacy point of the protocol.
class ClaimBoard {
 public:
  explicit ClaimBoard(const Scenario& s)
      : num_tasks_(s.num_tasks()),
        claims_(static_cast<std::size_t>(s.num_users()) * s.num_tasks(), 0),
        aggregate_(static_cast<std::size_t>(s.num_tasks()) + 1, 0) {}

  int aggregate(int task_id) const { return aggregate_[static_cast<std::size_t>(task_id)]; }
  bool own_claim(int user_id, int task_id) const { return claim_at(user_id, task_id) != 0; }

  RewardShares aggregates() const;
  RewardShares excluding(int user_id) const;  // q - q_i

  int clock() const { return clock_; }
  void tick() { ++clock_; }

  friend void apply_claim_update(ClaimBoard& board, const Scenario& s, int user_id,
                                 const Route& route);

 private:
  std::uint8_t& claim_at(int user_id, int task_id) {
    return claims_[static_cast<std::size_t>(user_id - 1) * num_tasks_ + (task_id - 1)];
  }
  std::uint8_t claim_at(int user_id, int task_id) const {
    return claims_[static_cast<std::size_t>(user_id - 1) * num_tasks_ + (task_id - 1)];
  }

  int num_tasks_ = 0;
  std::vector<std::uint8_t> claims_;
  std::vector<int> aggregate_;
  int clock_ = 0;
};

// Overwrites the user's claims with the rewarded points of `route` and
// recomputes the aggregates.
void apply_claim_update(ClaimBoard& board, const Scenario& s, int user_id, const Route& route);

enum class UpdateOrder { round_robin, random };

struct AdtsConfig {
  int tau_max = 100;                 // hard cap, in full passes over the users
  UpdateOrder order = UpdateOrder::round_robin;
  std::uint64_t seed = 1;            // for random order
  double epsilon = 1e-9;             // strict-improvement threshold
};

struct AdtsIterationRecord {
  int iteration = 0;                 // micro-iteration, 1-based
  int user = 0;
  double old_payoff = 0.0;
  double new_payoff = 0.0;
  double potential = 0.0;            // after this iteration
  bool applied = false;
};

struct AdtsTrace {
  std::vector<AdtsIterationRecord> iterations;
  StrategyProfile final_profile;
  bool converged = false;
  int last_applied_iteration = 0;    // 0 when no update was ever applied
  int passes_to_converge = 0;        // ceil(last_applied / I); 0 when immediate
};

// Simulates the asynchronous dynamics: starting from all-stay-home routes,
// one user per micro-iteration recomputes her best response against the
// board's counts excluding herself and switches only on an improvement
// greater than epsilon. Stops once every user has been verified stable since
// the last applied update, or at tau_max * I micro-iterations.
AdtsTrace run_adts(const Scenario& s, const AdtsConfig& config);

// Line-oriented trace export: iteration, user, payoff delta, potential.
void write_trace(std::ostream& out, const AdtsTrace& trace);

}  // namespace tsg

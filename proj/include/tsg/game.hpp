#pragma once

#include <map>
#include <optional>

#include "tsg/routing.hpp"

namespace tsg {

// One route per user plus the derived share counts m^(k,t). Share counts are
// kept for every visited point; only rewarded points enter payoffs.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  static StrategyProfile all_stay_home(const Scenario& s);

  const Route& route(int user_id) const { return routes_[static_cast<std::size_t>(user_id) - 1]; }
  int num_users() const { return static_cast<int>(routes_.size()); }

  // Replaces one user's route and updates the cached counts incrementally.
  void set_route(const Scenario& s, Route r);

  int share(TaskTimePoint p) const;
  const std::map<TaskTimePoint, int>& shares() const { return shares_; }

  // Counts at rewarded points only, optionally excluding one user's route.
  RewardShares reward_shares(const Scenario& s) const;
  RewardShares reward_shares_excluding(const Scenario& s, int user_id) const;

  // Recomputation from the routes; equals the cache by invariant.
  std::map<TaskTimePoint, int> recompute_shares() const;

 private:
  std::vector<Route> routes_;
  std::map<TaskTimePoint, int> shares_;
};

// Eq-form payoff of one user under the full profile: shared rewards along her
// route minus her movement costs.
double payoff(const Scenario& s, const StrategyProfile& profile, int user_id);

// Exact potential: sum over points of the harmonic prefix rho*/1+...+rho*/m,
// minus every user's movement cost. Any unilateral deviation moves this by
// exactly the deviator's payoff change.
double potential(const Scenario& s, const StrategyProfile& profile);

struct DeviationDelta {
  double payoff_delta = 0.0;
  double potential_delta = 0.0;
};

// Both deltas recomputed from scratch on the pre/post profiles. Throws on an
// infeasible replacement route.
DeviationDelta deviation_delta(const Scenario& s, const StrategyProfile& profile,
                               const Route& new_route);

struct NashWitness {
  int user = 0;
  Route improving_route;
  double gain = 0.0;
};

struct NashCheck {
  bool is_nash = false;
  std::optional<NashWitness> witness;
};

// True iff no user's best response improves her payoff by more than epsilon.
NashCheck is_nash(const Scenario& s, const StrategyProfile& profile, double epsilon = 1e-9);

}  // namespace tsg

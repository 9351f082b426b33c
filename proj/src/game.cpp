#include "tsg/game.hpp"

#include <stdexcept>

namespace tsg {

StrategyProfile StrategyProfile::all_stay_home(const Scenario& s) {
  StrategyProfile p;
  p.routes_.reserve(static_cast<std::size_t>(s.num_users()));
  for (int i = 1; i <= s.num_users(); ++i) {
    p.routes_.push_back(stay_home_route(s, i));
    for (const TaskTimePoint& pt : p.routes_.back().points) ++p.shares_[pt];
  }
  return p;
}

void StrategyProfile::set_route(const Scenario& s, Route r) {
  auto violations = validate_route(s, r);
  if (!violations.empty())
    throw std::invalid_argument("infeasible route for user " + std::to_string(r.owner) + ": " +
                                violations.front().detail);
  Route& slot = routes_[static_cast<std::size_t>(r.owner) - 1];
  for (const TaskTimePoint& pt : slot.points) {
    auto it = shares_.find(pt);
    if (--it->second == 0) shares_.erase(it);
  }
  slot = std::move(r);
  for (const TaskTimePoint& pt : slot.points) ++shares_[pt];
}

int StrategyProfile::share(TaskTimePoint p) const {
  auto it = shares_.find(p);
  return it == shares_.end() ? 0 : it->second;
}

RewardShares StrategyProfile::reward_shares(const Scenario& s) const {
  RewardShares out(s.num_tasks());
  for (int k = 1; k <= s.num_tasks(); ++k)
    out.add(k, share({k, s.task(k).execution_time}));
  return out;
}

RewardShares StrategyProfile::reward_shares_excluding(const Scenario& s, int user_id) const {
  RewardShares out = reward_shares(s);
  for (const TaskTimePoint& p : route(user_id).points)
    if (s.rewarded(p)) out.add(p.task, -1);
  return out;
}

std::map<TaskTimePoint, int> StrategyProfile::recompute_shares() const {
  std::map<TaskTimePoint, int> fresh;
  for (const Route& r : routes_)
    for (const TaskTimePoint& p : r.points) ++fresh[p];
  return fresh;
}

double payoff(const Scenario& s, const StrategyProfile& profile, int user_id) {
  const Route& r = profile.route(user_id);
  double reward = 0.0;
  for (const TaskTimePoint& p : r.points) {
    const Money rho = s.rho_star(p);
    if (!rho.is_zero()) reward += rho.to_double() / profile.share(p);
  }
  return reward - route_cost(s, r).to_double();
}

double potential(const Scenario& s, const StrategyProfile& profile) {
  double phi = 0.0;
  for (const auto& [point, m] : profile.shares()) {
    const Money rho = s.rho_star(point);
    if (rho.is_zero()) continue;
    const double r = rho.to_double();
    for (int q = 1; q <= m; ++q) phi += r / q;
  }
  for (int i = 1; i <= profile.num_users(); ++i)
    phi -= route_cost(s, profile.route(i)).to_double();
  return phi;
}

DeviationDelta deviation_delta(const Scenario& s, const StrategyProfile& profile,
                               const Route& new_route) {
  StrategyProfile after = profile;
  after.set_route(s, new_route);  // throws on infeasible routes
  DeviationDelta d;
  d.payoff_delta = payoff(s, after, new_route.owner) - payoff(s, profile, new_route.owner);
  d.potential_delta = potential(s, after) - potential(s, profile);
  return d;
}

NashCheck is_nash(const Scenario& s, const StrategyProfile& profile, double epsilon) {
  for (int i = 1; i <= profile.num_users(); ++i) {
    const RewardShares others = profile.reward_shares_excluding(s, i);
    const BestResponse br = best_response(s, i, others);
    const double current = payoff_against(s, profile.route(i), others);
    if (br.payoff > current + epsilon)
      return {false, NashWitness{i, br.route, br.payoff - current}};
  }
  return {true, std::nullopt};
}

}  // namespace tsg

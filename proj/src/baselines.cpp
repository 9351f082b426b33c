#include "tsg/baselines.hpp"

namespace tsg {

std::vector<int> greedy_distributed_tasks(const Scenario& s, int user_id) {
  std::vector<int> chosen;
  std::vector<char> taken(static_cast<std::size_t>(s.num_tasks()) + 1, 0);
  int phi = 1;
  int loc = s.user(user_id).initial_location;
  for (;;) {
    int pick = 0;
    for (int k : s.eligible(user_id)) {
      if (s.is_virtual(k) || taken[static_cast<std::size_t>(k)]) continue;
      const Task& task = s.task(k);
      if (task.execution_time - phi < s.travel_slots(user_id, loc, task.location)) continue;
      if (task.reward < s.travel_cost(user_id, loc, task.location)) continue;
      if (pick == 0) {
        pick = k;
        continue;
      }
      const Task& cur = s.task(pick);
      if (task.execution_time != cur.execution_time) {
        if (task.execution_time < cur.execution_time) pick = k;
      } else if (task.reward != cur.reward) {
        if (task.reward > cur.reward) pick = k;
      }  // equal time and reward: keep the lower id (eligible ids ascend)
    }
    if (pick == 0) break;
    chosen.push_back(pick);
    taken[static_cast<std::size_t>(pick)] = 1;
    phi = s.task(pick).execution_time;
    loc = s.task(pick).location;
  }
  return chosen;
}

StrategyProfile greedy_distributed(const Scenario& s) {
  StrategyProfile p = StrategyProfile::all_stay_home(s);
  for (int i = 1; i <= s.num_users(); ++i)
    p.set_route(s, route_through_tasks(s, i, greedy_distributed_tasks(s, i)));
  return p;
}

}  // namespace tsg

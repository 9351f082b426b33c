#pragma once

#include "tsg/central.hpp"

namespace tsg {

// Greedy distributed scheme: every user independently chases the earliest
// task she is eligible for, can reach in time, and believes profitable at the
// full reward (no coordination, no sharing adjustment). Ties on execution
// time go to the higher reward, then the lower task id. Payoffs of the
// returned profile are evaluated under the true sharing rule.
StrategyProfile greedy_distributed(const Scenario& s);

// The per-user task sequence the scheme picks, exposed for tests.
std::vector<int> greedy_distributed_tasks(const Scenario& s, int user_id);

}  // namespace tsg

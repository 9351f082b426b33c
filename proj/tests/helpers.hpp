#pragma once

#include <array>
#include <vector>

#include "tsg/core_model.hpp"
#include "tsg/rng.hpp"
#include "tsg/scenario_gen.hpp"

namespace tsg::test {

// Explicit-table scenario where all users share one movement table.
// tasks: (location, execution_time, reward); users: initial locations.
struct SimpleSpec {
  int horizon = 8;
  int num_locations = 2;
  std::vector<std::array<double, 3>> tasks;
  std::vector<int> user_locations;
  std::vector<int> time_table;      // L x L row-major; empty = all 1
  std::vector<double> cost_table;   // L x L row-major; empty = all 0
};

inline Scenario make_simple(const SimpleSpec& spec) {
  ScenarioData d;
  d.horizon = spec.horizon;
  d.slot_minutes = 1.0;
  const int L = spec.num_locations;
  for (int l = 1; l <= L; ++l) d.locations.push_back({l, std::nullopt});
  int id = 0;
  for (const auto& [loc, time, reward] : spec.tasks)
    d.tasks.push_back({++id, static_cast<int>(loc), static_cast<int>(time),
                       Money::from_double(reward), 1});
  id = 0;
  for (int loc : spec.user_locations) d.users.push_back({++id, loc, 0.1, Money{}, 1});

  std::vector<int> time(static_cast<std::size_t>(L) * L, 1);
  std::vector<Money> cost(static_cast<std::size_t>(L) * L, Money{});
  if (!spec.time_table.empty())
    for (std::size_t i = 0; i < time.size(); ++i) time[i] = spec.time_table[i];
  if (!spec.cost_table.empty())
    for (std::size_t i = 0; i < cost.size(); ++i) cost[i] = Money::from_double(spec.cost_table[i]);
  ExplicitTables tables;
  for (std::size_t u = 0; u < spec.user_locations.size(); ++u) {
    tables.time.push_back(time);
    tables.cost.push_back(cost);
  }
  d.tables = std::move(tables);
  return Scenario(std::move(d));
}

// Small geometric instance for oracle-vs-solver property tests.
inline Scenario small_random_scenario(std::uint64_t seed, int max_users = 3, int max_tasks = 4,
                                      int max_horizon = 8, int max_locations = 5) {
  std::mt19937_64 rng(seed);
  GenConfig cfg;
  cfg.num_users = uniform_int(rng, 1, max_users);
  cfg.num_tasks = uniform_int(rng, 1, max_tasks);
  cfg.horizon = uniform_int(rng, 2, max_horizon);
  cfg.num_locations = uniform_int(rng, 2, max_locations);
  cfg.cost_coefficient = Money::from_double(uniform_int(rng, 0, 20) / 10.0);
  cfg.speed = 0.2 + 0.2 * uniform_int(rng, 0, 3);
  cfg.seed = rng();
  return generate(cfg);
}

inline RewardShares random_shares(const Scenario& s, std::mt19937_64& rng, int max_count = 2) {
  RewardShares shares(s.num_tasks());
  for (int k = 1; k <= s.num_tasks(); ++k) shares.add(k, uniform_int(rng, 0, max_count));
  return shares;
}

}  // namespace tsg::test

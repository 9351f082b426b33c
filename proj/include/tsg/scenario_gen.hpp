#pragma once

#include <cstdint>

#include "tsg/core_model.hpp"
#include "tsg/mobility.hpp"

namespace tsg {

// Random-scenario parameters. Defaults follow the standard simulation setup:
// 10 tasks over 15 one-minute slots in a 1 km x 1 km region, rewards drawn
// from {10, 15, 20}, speed 0.1 km/min.
struct GenConfig {
  int num_users = 10;            // I
  int num_tasks = 10;            // K
  int horizon = 15;              // T
  int num_locations = 0;         // L; 0 = one fresh location per task and user
  double region_km = 1.0;
  std::vector<Money> reward_levels = {Money::from_units(100000), Money::from_units(150000),
                                      Money::from_units(200000)};
  int reputation_levels = 3;
  Money cost_coefficient = Money::from_units(1000);  // c_move = 0.1 per km
  double speed = 0.1;            // km per minute
  double slot_minutes = 1.0;
  std::uint64_t seed = 1;
};

// Geometric scenario: locations i.i.d. uniform over the square, task rewards
// uniform over the levels, execution times uniform over 2..T (a task at slot
// 1 can never be reached), reputations/thresholds uniform over the levels.
// Deterministic under the seed.
Scenario generate(const GenConfig& config);

// The three-user, three-task example with drive/walk movement times taken
// from map data; driving costs $2 between distinct locations, walking is
// free. Execution times (4, 15, 6) make every reported comparison outcome
// reachable within the 15-slot horizon.
Scenario real_world_fixture();

// The movement-time document behind the fixture (mode, from, to, minutes, cost).
MovementDoc real_world_movement_doc();

}  // namespace tsg

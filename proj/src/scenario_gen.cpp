#include "tsg/scenario_gen.hpp"

#include <stdexcept>

#include "tsg/rng.hpp"

namespace tsg {

Scenario generate(const GenConfig& config) {
  if (config.num_users < 1 || config.num_tasks < 0 || config.horizon < 2 ||
      config.region_km <= 0 || config.speed <= 0 || config.slot_minutes <= 0 ||
      config.reputation_levels < 1 || config.reward_levels.empty())
    throw std::invalid_argument("invalid generation config");

  std::mt19937_64 rng(config.seed);
  ScenarioData data;
  data.horizon = config.horizon;
  data.slot_minutes = config.slot_minutes;

  const int I = config.num_users, K = config.num_tasks;
  const int L = config.num_locations > 0 ? config.num_locations : K + I;
  data.locations.reserve(static_cast<std::size_t>(L));
  for (int l = 1; l <= L; ++l)
    data.locations.push_back(
        {l, Vec2{uniform_unit(rng) * config.region_km, uniform_unit(rng) * config.region_km}});

  // With L fixed, tasks and users land on shared locations (co-located tasks
  // allowed); otherwise each entity gets its own point: tasks take 1..K,
  // users take K+1..K+I.
  auto place = [&](int default_loc) {
    return config.num_locations > 0 ? uniform_int(rng, 1, L) : default_loc;
  };

  data.tasks.reserve(static_cast<std::size_t>(K));
  for (int k = 1; k <= K; ++k) {
    Task t;
    t.id = k;
    t.location = place(k);
    t.reward = config.reward_levels[uniform_index(rng, config.reward_levels.size())];
    t.execution_time = uniform_int(rng, 2, config.horizon);
    t.reputation_threshold = uniform_int(rng, 1, config.reputation_levels);
    data.tasks.push_back(t);
  }

  data.users.reserve(static_cast<std::size_t>(I));
  for (int i = 1; i <= I; ++i) {
    User u;
    u.id = i;
    u.initial_location = place(K + i);
    u.speed = config.speed;
    u.cost_coefficient = config.cost_coefficient;
    u.reputation = uniform_int(rng, 1, config.reputation_levels);
    data.users.push_back(u);
  }

  return Scenario(std::move(data));
}

MovementDoc real_world_movement_doc() {
  // Minutes by mode between the three map locations; symmetric.
  static constexpr int kDrive[3][3] = {{0, 3, 4}, {3, 0, 2}, {4, 2, 0}};
  static constexpr int kWalk[3][3] = {{0, 11, 15}, {11, 0, 6}, {15, 6, 0}};
  const Money drive_cost = Money::from_units(20000);  // $2 per inter-location drive
  MovementDoc doc;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      doc.rows.push_back({"drive", a, b, static_cast<double>(kDrive[a - 1][b - 1]), drive_cost});
    }
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      doc.rows.push_back({"walk", a, b, static_cast<double>(kWalk[a - 1][b - 1]), Money{}});
    }
  return doc;
}

Scenario real_world_fixture() {
  const auto modes = ingest_movement_table(real_world_movement_doc(), 3, 1.0);
  const MovementTable& drive = modes.at("drive");
  const MovementTable& walk = modes.at("walk");

  ScenarioData data;
  data.horizon = 15;
  data.slot_minutes = 1.0;
  data.locations = {{1, std::nullopt}, {2, std::nullopt}, {3, std::nullopt}};
  data.tasks = {
      {1, 1, 4, Money::from_units(150000), 1},
      {2, 2, 15, Money::from_units(100000), 1},
      {3, 3, 6, Money::from_units(100000), 1},
  };
  // User 1 drives from location 2; users 2 and 3 walk from location 1.
  data.users = {
      {1, 2, 0.1, Money{}, 1},
      {2, 1, 0.1, Money{}, 1},
      {3, 1, 0.1, Money{}, 1},
  };
  ExplicitTables tables;
  for (const MovementTable* t : {&drive, &walk, &walk}) {
    tables.time.push_back(t->time);
    tables.cost.push_back(t->cost);
  }
  data.tables = std::move(tables);
  return Scenario(std::move(data));
}

}  // namespace tsg

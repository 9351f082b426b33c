#include "tsg/core_model.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "tsg/mobility.hpp"
#include "tsg/rng.hpp"

namespace tsg {

namespace {

// Full triangle enumeration is O(I*L^3); above this many locations the
// validator samples random triples instead (only generated geometric
// scenarios get that large, and metric distances satisfy the property by
// construction).
constexpr int kFullTriangleCheckMaxL = 48;
constexpr int kSampledTriangleChecks = 20000;

void check_triangle(const ScenarioData& data, const Scenario* s,
                    std::vector<std::string>& out) {
  const int L = static_cast<int>(data.locations.size());
  const int I = static_cast<int>(data.users.size());
  auto cost = [&](int u, int a, int b) { return s->travel_cost(u, a, b); };
  auto record = [&](int u, int a, int b, int c) {
    if (cost(u, a, b) + cost(u, b, c) < cost(u, a, c)) {
      out.push_back("user " + std::to_string(u) + ": cost(" + std::to_string(a) + "," +
                    std::to_string(b) + ") + cost(" + std::to_string(b) + "," +
                    std::to_string(c) + ") < cost(" + std::to_string(a) + "," +
                    std::to_string(c) + ")");
    }
  };
  if (L <= kFullTriangleCheckMaxL) {
    for (int u = 1; u <= I; ++u)
      for (int a = 1; a <= L; ++a)
        for (int b = 1; b <= L; ++b)
          for (int c = 1; c <= L; ++c) record(u, a, b, c);
  } else {
    std::mt19937_64 rng(0x7451u ^ static_cast<std::uint64_t>(L));
    for (int n = 0; n < kSampledTriangleChecks; ++n) {
      const int u = uniform_int(rng, 1, I);
      record(u, uniform_int(rng, 1, L), uniform_int(rng, 1, L), uniform_int(rng, 1, L));
    }
  }
}

}  // namespace

ValidationReport validate_scenario(const ScenarioData& data) {
  ValidationReport rep;
  auto err = [&](std::string msg) { rep.errors.push_back(std::move(msg)); };

  const int L = static_cast<int>(data.locations.size());
  const int K = static_cast<int>(data.tasks.size());
  const int I = static_cast<int>(data.users.size());
  const int T = data.horizon;

  if (T < 1) err("horizon must be at least 1");
  if (data.slot_minutes <= 0) err("slot_length must be positive");
  if (L == 0) err("at least one location required");
  if (I == 0) err("at least one user required");

  for (int i = 0; i < L; ++i)
    if (data.locations[i].id != i + 1)
      err("location ids must be contiguous from 1; index " + std::to_string(i) + " has id " +
          std::to_string(data.locations[i].id));
  const bool geometric = !data.tables.has_value();
  for (const auto& loc : data.locations)
    if (loc.position.has_value() != geometric)
      err("location " + std::to_string(loc.id) +
          (geometric ? ": position required in geometric scenarios"
                     : ": position must be absent with explicit tables"));

  for (int k = 0; k < K; ++k) {
    const Task& t = data.tasks[k];
    if (t.id != k + 1) err("task ids must be contiguous from 1");
    if (t.location < 1 || t.location > L)
      err("task " + std::to_string(t.id) + ": unknown location " + std::to_string(t.location));
    if (t.execution_time < 1 || t.execution_time > T)
      err("task " + std::to_string(t.id) + ": execution_time outside 1.." + std::to_string(T));
    if (t.reward.negative()) err("task " + std::to_string(t.id) + ": negative reward");
  }

  for (int i = 0; i < I; ++i) {
    const User& u = data.users[i];
    if (u.id != i + 1) err("user ids must be contiguous from 1");
    if (u.initial_location < 1 || u.initial_location > L)
      err("user " + std::to_string(u.id) + ": unknown initial_location");
    if (geometric && u.speed <= 0)
      err("user " + std::to_string(u.id) + ": speed must be positive in geometric scenarios");
    if (u.cost_coefficient.negative())
      err("user " + std::to_string(u.id) + ": negative cost_coefficient");
  }

  if (data.tables) {
    const auto& tb = *data.tables;
    if (static_cast<int>(tb.time.size()) != I || static_cast<int>(tb.cost.size()) != I) {
      err("movement tables must cover every user");
      return rep;
    }
    for (int i = 0; i < I; ++i) {
      if (static_cast<int>(tb.time[i].size()) != L * L ||
          static_cast<int>(tb.cost[i].size()) != L * L) {
        err("user " + std::to_string(i + 1) + ": movement table is not " + std::to_string(L) +
            "x" + std::to_string(L));
        continue;
      }
      for (int a = 0; a < L; ++a) {
        for (int b = 0; b < L; ++b) {
          const int slots = tb.time[i][a * L + b];
          const Money c = tb.cost[i][a * L + b];
          if (a == b && slots != 1)
            err("user " + std::to_string(i + 1) + ": movement_time[" + std::to_string(a + 1) +
                "," + std::to_string(a + 1) + "] must be 1");
          if (slots < 1)
            err("user " + std::to_string(i + 1) + ": movement_time[" + std::to_string(a + 1) +
                "," + std::to_string(b + 1) + "] below 1");
          if (c.negative())
            err("user " + std::to_string(i + 1) + ": negative movement_cost[" +
                std::to_string(a + 1) + "," + std::to_string(b + 1) + "]");
          if (a == b && !c.is_zero())
            err("user " + std::to_string(i + 1) + ": movement_cost[" + std::to_string(a + 1) +
                "," + std::to_string(a + 1) + "] must be 0");
        }
      }
    }
  }

  return rep;
}

Scenario::Scenario(ScenarioData data, bool strict_triangle, DistanceFn distance)
    : data_(std::move(data)), distance_(distance) {
  ValidationReport rep = validate_scenario(data_);
  if (!rep.ok()) {
    std::string msg = "invalid scenario:";
    for (const auto& e : rep.errors) msg += "\n  " + e;
    throw std::invalid_argument(msg);
  }
  eligible_.reserve(data_.users.size());
  for (const User& u : data_.users) eligible_.push_back(eligible_set(data_, u));

  check_triangle(data_, this, triangle_violations_);
  if (strict_triangle && !triangle_violations_.empty()) {
    std::string msg = "movement costs violate the triangle property:";
    for (const auto& v : triangle_violations_) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }
}

Money Scenario::rho_star(TaskTimePoint p) const {
  if (is_virtual(p.task)) {
    if (virtual_owner(p.task) < 1 || virtual_owner(p.task) > num_users())
      throw std::invalid_argument("rho_star: unknown task id " + std::to_string(p.task));
    return Money{};
  }
  if (p.task < 1) throw std::invalid_argument("rho_star: unknown task id " + std::to_string(p.task));
  const Task& t = task(p.task);
  return p.time == t.execution_time ? t.reward : Money{};
}

int Scenario::travel_slots(int user_id, int from_loc, int to_loc) const {
  if (data_.tables) {
    const int L = num_locations();
    return (*data_.tables).time[user_id - 1][(from_loc - 1) * L + (to_loc - 1)];
  }
  const User& u = user(user_id);
  const double dist = distance_(*location(from_loc).position, *location(to_loc).position);
  return geometric_movement_time(dist, u.speed, data_.slot_minutes);
}

Money Scenario::travel_cost(int user_id, int from_loc, int to_loc) const {
  if (data_.tables) {
    const int L = num_locations();
    return (*data_.tables).cost[user_id - 1][(from_loc - 1) * L + (to_loc - 1)];
  }
  if (from_loc == to_loc) return Money{};
  const User& u = user(user_id);
  const double dist = distance_(*location(from_loc).position, *location(to_loc).position);
  return geometric_movement_cost(dist, u.cost_coefficient);
}

bool Scenario::is_eligible(int user_id, int task_id) const {
  if (is_virtual(task_id)) return virtual_owner(task_id) == user_id;
  return user(user_id).reputation >= task(task_id).reputation_threshold;
}

std::vector<int> eligible_set(const ScenarioData& data, const User& user) {
  std::vector<int> out;
  for (const Task& t : data.tasks)
    if (user.reputation >= t.reputation_threshold) out.push_back(t.id);
  out.push_back(static_cast<int>(data.tasks.size()) + user.id);  // own virtual task
  return out;
}

}  // namespace tsg

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tsg/money.hpp"

namespace tsg {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double euclidean(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct Location {
  int id = 0;                         // 1..L, contiguous
  std::optional<Vec2> position;       // present iff the scenario is geometric
};

struct Task {
  int id = 0;                         // 1..K
  int location = 0;
  int execution_time = 0;             // slot in 1..T
  Money reward;                       // >= 0
  int reputation_threshold = 0;
};

struct User {
  int id = 0;                         // 1..I
  int initial_location = 0;
  double speed = 0.0;                 // km per minute; used only in geometric scenarios
  Money cost_coefficient;             // money per km; geometric scenarios only
  int reputation = 0;
};

// One spot on a user's route: task id (real 1..K or virtual K+1..K+I) at a slot.
struct TaskTimePoint {
  int task = 0;
  int time = 0;
  friend bool operator==(TaskTimePoint, TaskTimePoint) = default;
  friend auto operator<=>(TaskTimePoint, TaskTimePoint) = default;
};

// Per-user explicit movement tables, row-major L x L.
struct ExplicitTables {
  std::vector<std::vector<int>> time;      // [user-1][from*L + to], slots
  std::vector<std::vector<Money>> cost;    // [user-1][from*L + to]
};

struct ScenarioData {
  int horizon = 0;                    // T
  double slot_minutes = 1.0;          // delta
  std::vector<Location> locations;
  std::vector<Task> tasks;
  std::vector<User> users;
  std::optional<ExplicitTables> tables;  // absent => geometric (from positions)
};

struct ValidationReport {
  std::vector<std::string> errors;
  std::vector<std::string> triangle_violations;  // Eq.-style c(l,l')+c(l',l'') >= c(l,l'') failures
  bool ok() const { return errors.empty(); }
};

// Structural validation; the triangle property is reported separately because
// ingested real-world tables may violate it by rounding. For large geometric
// scenarios the triangle check samples triples instead of enumerating L^3.
ValidationReport validate_scenario(const ScenarioData& data);

// Distance metric for geometric scenarios; Euclidean unless a caller plugs
// in another one (scenario files always mean Euclidean).
using DistanceFn = double (*)(Vec2, Vec2);

// Immutable world description shared by every algorithm. Construction
// validates; structural errors throw std::invalid_argument, and triangle
// violations throw only when strict_triangle is set.
class Scenario {
 public:
  explicit Scenario(ScenarioData data, bool strict_triangle = false,
                    DistanceFn distance = euclidean);

  int num_locations() const { return static_cast<int>(data_.locations.size()); }
  int num_tasks() const { return static_cast<int>(data_.tasks.size()); }
  int num_users() const { return static_cast<int>(data_.users.size()); }
  int horizon() const { return data_.horizon; }
  double slot_minutes() const { return data_.slot_minutes; }
  bool geometric() const { return !data_.tables.has_value(); }
  bool triangle_ok() const { return triangle_violations_.empty(); }
  const std::vector<std::string>& triangle_violations() const { return triangle_violations_; }
  const ScenarioData& data() const { return data_; }

  const Task& task(int task_id) const { return data_.tasks[task_id - 1]; }
  const User& user(int user_id) const { return data_.users[user_id - 1]; }
  const Location& location(int loc_id) const { return data_.locations[loc_id - 1]; }

  // Virtual tasks occupy reserved ids above K, one per user.
  int virtual_task(int user_id) const { return num_tasks() + user_id; }
  bool is_virtual(int task_id) const { return task_id > num_tasks(); }
  bool is_real(int task_id) const { return task_id >= 1 && task_id <= num_tasks(); }
  int virtual_owner(int task_id) const { return task_id - num_tasks(); }

  int task_location(int task_id) const {
    return is_virtual(task_id) ? user(virtual_owner(task_id)).initial_location
                               : task(task_id).location;
  }
  Money task_reward(int task_id) const {
    return is_virtual(task_id) ? Money{} : task(task_id).reward;
  }

  // Time-dependent reward: the full reward exactly at the execution slot,
  // zero otherwise and always zero for virtual tasks.
  Money rho_star(TaskTimePoint p) const;
  bool rewarded(TaskTimePoint p) const { return !rho_star(p).is_zero(); }

  int travel_slots(int user_id, int from_loc, int to_loc) const;
  Money travel_cost(int user_id, int from_loc, int to_loc) const;

  // Tasks the user may perform (reputation rule) plus her virtual task,
  // ascending ids (virtual last since its id exceeds K).
  std::span<const int> eligible(int user_id) const {
    return eligible_[static_cast<std::size_t>(user_id) - 1];
  }
  bool is_eligible(int user_id, int task_id) const;

 private:
  ScenarioData data_;
  DistanceFn distance_ = euclidean;
  std::vector<std::vector<int>> eligible_;
  std::vector<std::string> triangle_violations_;
};

// The reputation rule behind Scenario::eligible, exposed for direct use.
std::vector<int> eligible_set(const ScenarioData& data, const User& user);

// Share counts at rewarded points, indexed by real task id. The reward of
// task k exists only at (k, t[k]), so one counter per task covers all of H.
class RewardShares {
 public:
  RewardShares() = default;
  explicit RewardShares(int num_tasks) : counts_(static_cast<std::size_t>(num_tasks) + 1, 0) {}

  int count(int task_id) const { return counts_[static_cast<std::size_t>(task_id)]; }
  void add(int task_id, int delta) { counts_[static_cast<std::size_t>(task_id)] += delta; }
  int num_tasks() const { return static_cast<int>(counts_.size()) - 1; }
  friend bool operator==(const RewardShares&, const RewardShares&) = default;

 private:
  std::vector<int> counts_;
};

}  // namespace tsg

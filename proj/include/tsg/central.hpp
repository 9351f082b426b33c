#pragma once

#include <iosfwd>

#include "tsg/game.hpp"

namespace tsg {

// Centralized assignment of tasks to users plus the routes it induces (each
// user visits her tasks in execution-time order, departing right after the
// previous task and waiting at the destination).
struct Allocation {
  std::vector<std::vector<std::uint8_t>> y;      // [user-1][task-1]
  std::vector<std::vector<int>> tasks_of_user;   // ascending execution time
  std::vector<Route> routes;                     // induced, one per user

  bool assigned(int user_id, int task_id) const {
    return y[static_cast<std::size_t>(user_id) - 1][static_cast<std::size_t>(task_id) - 1] != 0;
  }
  // -1 when unassigned; smallest assigned user otherwise (unique under
  // single-assignment outputs).
  int assignee(int task_id) const;
};

// Route realizing `tasks` (ascending execution time) for one user; throws if
// the chain is infeasible.
Route route_through_tasks(const Scenario& s, int user_id, const std::vector<int>& tasks);

StrategyProfile induced_profile(const Scenario& s, const Allocation& a);

// Builds the allocation equivalent of an arbitrary profile: y from visited
// execution-time points.
Allocation allocation_from_profile(const Scenario& s, const StrategyProfile& p);

struct Surplus {
  Money reward;    // total reward of covered tasks
  Money cost;      // total movement cost
  Money surplus;   // reward - cost
};

// Social surplus of a profile; equals the sum of user payoffs (shared rewards
// telescope across users).
Surplus surplus(const Scenario& s, const StrategyProfile& profile);

// Greedy centralized allocation: tasks by ascending execution time (ties by
// id), each offered to users by ascending movement cost from their current
// position (ties by id); the first eligible user who can arrive on time and
// whose move costs no more than the reward takes it. O(K I log I).
Allocation greedy_centralized(const Scenario& s);

enum class CtaMode {
  pruned,        // at most one user per task (optimal under the triangle property)
  unrestricted,  // any subset of users per task
};

struct CtaResult {
  Allocation allocation;
  Surplus surplus;
};

// Exact surplus maximization by exhaustive search over task assignments in
// execution-time order, with branch-and-bound on the remaining-reward upper
// bound. Deterministic: ties resolve to the first maximizer in enumeration
// order (none before user 1 before user 2 ...) regardless of worker count.
// workers = 1 runs the serial reference; 0 uses every available thread.
// Throws when the search space exceeds the node guard (1e7) or when pruned
// mode is requested on a scenario violating the cost triangle property.
CtaResult exact_cta(const Scenario& s, CtaMode mode = CtaMode::pruned, int workers = 0);

// Allocation export: one row per task, "task,user" or "task,none".
void write_allocation(std::ostream& out, const Scenario& s, const Allocation& a);

}  // namespace tsg

#include "tsg/central.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tsg {

namespace {

constexpr double kNodeGuard = 1e7;

std::vector<int> tasks_by_time(const Scenario& s) {
  std::vector<int> order(static_cast<std::size_t>(s.num_tasks()));
  for (int k = 1; k <= s.num_tasks(); ++k) order[static_cast<std::size_t>(k) - 1] = k;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const int ta = s.task(a).execution_time, tb = s.task(b).execution_time;
    return ta != tb ? ta < tb : a < b;
  });
  return order;
}

// Depth-first search over task assignments in execution-time order. The
// incumbent is a shared monotone lower bound used only for pruning with a
// strict comparison, so every maximizer survives and the first one found in
// enumeration order is returned independent of worker scheduling.
struct CtaSearch {
  const Scenario& s;
  CtaMode mode;
  std::vector<int> order;                 // task ids, ascending (t, id)
  std::vector<std::int64_t> suffix_reward;
  std::atomic<std::int64_t>* incumbent = nullptr;

  std::vector<int> phi, loc;              // per-user next free slot / position
  std::vector<int> choice, best_choice;   // per-depth choice codes
  std::int64_t current = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::min();

  explicit CtaSearch(const Scenario& sc, CtaMode m, std::vector<int> ord,
                     std::vector<std::int64_t> suffix, std::atomic<std::int64_t>* inc)
      : s(sc), mode(m), order(std::move(ord)), suffix_reward(std::move(suffix)), incumbent(inc) {
    reset();
  }

  void reset() {
    const int I = s.num_users();
    phi.assign(static_cast<std::size_t>(I) + 1, 1);
    loc.assign(static_cast<std::size_t>(I) + 1, 0);
    for (int i = 1; i <= I; ++i) loc[static_cast<std::size_t>(i)] = s.user(i).initial_location;
    choice.assign(order.size(), 0);
    best_choice.assign(order.size(), 0);
    current = 0;
    best = std::numeric_limits<std::int64_t>::min();
  }

  bool user_feasible(int user, int task) const {
    if (!s.is_eligible(user, task)) return false;
    const int t = s.task(task).execution_time;
    const std::size_t u = static_cast<std::size_t>(user);
    return t - phi[u] >= s.travel_slots(user, loc[u], s.task(task).location);
  }

  // Applies `user -> task`, returning the move cost; caller restores state.
  std::int64_t apply_user(int user, int task) {
    const std::size_t u = static_cast<std::size_t>(user);
    const std::int64_t cost = s.travel_cost(user, loc[u], s.task(task).location).units();
    phi[u] = s.task(task).execution_time;
    loc[u] = s.task(task).location;
    return cost;
  }

  int num_choices() const {
    return mode == CtaMode::pruned ? s.num_users() + 1 : 1 << s.num_users();
  }

  void dfs(std::size_t depth) {
    if (current + suffix_reward[depth] < incumbent->load(std::memory_order_relaxed)) return;
    if (depth == order.size()) {
      if (current > best) {
        best = current;
        best_choice = choice;
      }
      std::int64_t seen = incumbent->load(std::memory_order_relaxed);
      while (current > seen &&
             !incumbent->compare_exchange_weak(seen, current, std::memory_order_relaxed)) {
      }
      return;
    }
    const int task = order[depth];
    const std::int64_t reward = s.task(task).reward.units();
    const int nc = num_choices();
    for (int c = 0; c < nc; ++c) {
      choice[depth] = c;
      if (c == 0) {  // task left unassigned
        dfs(depth + 1);
        continue;
      }
      if (mode == CtaMode::pruned) {
        const int user = c;
        if (!user_feasible(user, task)) continue;
        const std::size_t u = static_cast<std::size_t>(user);
        const int old_phi = phi[u], old_loc = loc[u];
        const std::int64_t cost = apply_user(user, task);
        current += reward - cost;
        dfs(depth + 1);
        current -= reward - cost;
        phi[u] = old_phi;
        loc[u] = old_loc;
      } else {
        bool ok = true;
        for (int i = 1; i <= s.num_users() && ok; ++i)
          if ((c >> (i - 1)) & 1) ok = user_feasible(i, task);
        if (!ok) continue;
        std::vector<std::pair<int, int>> saved;
        std::int64_t cost = 0;
        for (int i = 1; i <= s.num_users(); ++i) {
          if (!((c >> (i - 1)) & 1)) continue;
          const std::size_t u = static_cast<std::size_t>(i);
          saved.emplace_back(phi[u], loc[u]);
          cost += apply_user(i, task);
        }
        current += reward - cost;
        dfs(depth + 1);
        current -= reward - cost;
        std::size_t si = 0;
        for (int i = 1; i <= s.num_users(); ++i) {
          if (!((c >> (i - 1)) & 1)) continue;
          const std::size_t u = static_cast<std::size_t>(i);
          phi[u] = saved[si].first;
          loc[u] = saved[si].second;
          ++si;
        }
      }
    }
    choice[depth] = 0;
  }
};

Allocation allocation_from_choices(const Scenario& s, CtaMode mode,
                                   const std::vector<int>& order,
                                   const std::vector<int>& choices) {
  const int I = s.num_users(), K = s.num_tasks();
  Allocation a;
  a.y.assign(static_cast<std::size_t>(I),
             std::vector<std::uint8_t>(static_cast<std::size_t>(K), 0));
  a.tasks_of_user.assign(static_cast<std::size_t>(I), {});
  for (std::size_t d = 0; d < order.size(); ++d) {
    const int task = order[d];
    const int c = choices[d];
    if (c == 0) continue;
    if (mode == CtaMode::pruned) {
      a.y[static_cast<std::size_t>(c) - 1][static_cast<std::size_t>(task) - 1] = 1;
      a.tasks_of_user[static_cast<std::size_t>(c) - 1].push_back(task);
    } else {
      for (int i = 1; i <= I; ++i)
        if ((c >> (i - 1)) & 1) {
          a.y[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(task) - 1] = 1;
          a.tasks_of_user[static_cast<std::size_t>(i) - 1].push_back(task);
        }
    }
  }
  a.routes.reserve(static_cast<std::size_t>(I));
  for (int i = 1; i <= I; ++i)
    a.routes.push_back(route_through_tasks(s, i, a.tasks_of_user[static_cast<std::size_t>(i) - 1]));
  return a;
}

}  // namespace

int Allocation::assignee(int task_id) const {
  for (std::size_t i = 0; i < y.size(); ++i)
    if (y[i][static_cast<std::size_t>(task_id) - 1]) return static_cast<int>(i) + 1;
  return -1;
}

Route route_through_tasks(const Scenario& s, int user_id, const std::vector<int>& tasks) {
  Route r{user_id, {{s.virtual_task(user_id), 1}}};
  int prev_t = 1;
  int prev_l = s.user(user_id).initial_location;
  for (int k : tasks) {
    const int exec = s.task(k).execution_time;
    const int arrive = prev_t + s.travel_slots(user_id, prev_l, s.task(k).location);
    if (arrive > exec)
      throw std::invalid_argument("user " + std::to_string(user_id) + " cannot reach task " +
                                  std::to_string(k) + " by slot " + std::to_string(exec));
    for (int t = arrive; t <= exec; ++t) r.points.push_back({k, t});
    prev_t = exec;
    prev_l = s.task(k).location;
  }
  return r;
}

StrategyProfile induced_profile(const Scenario& s, const Allocation& a) {
  StrategyProfile p = StrategyProfile::all_stay_home(s);
  for (const Route& r : a.routes) p.set_route(s, r);
  return p;
}

Allocation allocation_from_profile(const Scenario& s, const StrategyProfile& p) {
  const int I = s.num_users(), K = s.num_tasks();
  Allocation a;
  a.y.assign(static_cast<std::size_t>(I),
             std::vector<std::uint8_t>(static_cast<std::size_t>(K), 0));
  a.tasks_of_user.assign(static_cast<std::size_t>(I), {});
  for (int i = 1; i <= I; ++i) {
    a.routes.push_back(p.route(i));
    for (int k : worked_tasks(s, p.route(i))) {
      a.y[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(k) - 1] = 1;
      a.tasks_of_user[static_cast<std::size_t>(i) - 1].push_back(k);
    }
  }
  return a;
}

Surplus surplus(const Scenario& s, const StrategyProfile& profile) {
  Surplus out;
  for (int k = 1; k <= s.num_tasks(); ++k)
    if (profile.share({k, s.task(k).execution_time}) >= 1) out.reward += s.task(k).reward;
  for (int i = 1; i <= s.num_users(); ++i) out.cost += route_cost(s, profile.route(i));
  out.surplus = out.reward - out.cost;
  return out;
}

Allocation greedy_centralized(const Scenario& s) {
  const int I = s.num_users(), K = s.num_tasks();
  std::vector<int> phi(static_cast<std::size_t>(I) + 1, 1);
  std::vector<int> loc(static_cast<std::size_t>(I) + 1, 0);
  for (int i = 1; i <= I; ++i) loc[static_cast<std::size_t>(i)] = s.user(i).initial_location;

  Allocation a;
  a.y.assign(static_cast<std::size_t>(I),
             std::vector<std::uint8_t>(static_cast<std::size_t>(K), 0));
  a.tasks_of_user.assign(static_cast<std::size_t>(I), {});

  std::vector<std::pair<Money, int>> ranked(static_cast<std::size_t>(I));
  for (int k : tasks_by_time(s)) {
    const Task& task = s.task(k);
    for (int i = 1; i <= I; ++i)
      ranked[static_cast<std::size_t>(i) - 1] = {
          s.travel_cost(i, loc[static_cast<std::size_t>(i)], task.location), i};
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [cost, i] : ranked) {
      const std::size_t u = static_cast<std::size_t>(i);
      if (!s.is_eligible(i, k)) continue;
      if (task.execution_time - phi[u] < s.travel_slots(i, loc[u], task.location)) continue;
      if (task.reward < cost) continue;  // no incentive
      phi[u] = task.execution_time;
      loc[u] = task.location;
      a.y[u - 1][static_cast<std::size_t>(k) - 1] = 1;
      a.tasks_of_user[u - 1].push_back(k);
      break;
    }
  }
  for (int i = 1; i <= I; ++i)
    a.routes.push_back(route_through_tasks(s, i, a.tasks_of_user[static_cast<std::size_t>(i) - 1]));
  return a;
}

CtaResult exact_cta(const Scenario& s, CtaMode mode, int workers) {
  const int I = s.num_users(), K = s.num_tasks();
  if (mode == CtaMode::pruned && !s.triangle_ok())
    throw std::invalid_argument(
        "pruned exact solve requires the movement-cost triangle property; scenario violates it");
  const double nodes = mode == CtaMode::pruned
                           ? std::pow(static_cast<double>(I) + 1, K)
                           : std::pow(2.0, static_cast<double>(I) * K);
  if (nodes > kNodeGuard)
    throw std::runtime_error("instance too large for exact solve (approx. " +
                             std::to_string(nodes) + " nodes, guard " +
                             std::to_string(static_cast<long>(kNodeGuard)) + ")");

  std::vector<int> order = tasks_by_time(s);
  std::vector<std::int64_t> suffix(order.size() + 1, 0);
  for (std::size_t d = order.size(); d-- > 0;)
    suffix[d] = suffix[d + 1] + s.task(order[d]).reward.units();

  // The empty assignment is always feasible at surplus 0.
  std::atomic<std::int64_t> incumbent{0};
  std::vector<int> best_choices(order.size(), 0);
  std::int64_t best = 0;

  if (!order.empty()) {
    const int nc = mode == CtaMode::pruned ? I + 1 : 1 << I;
    struct FirstLevel {
      std::int64_t value = std::numeric_limits<std::int64_t>::min();
      std::vector<int> choices;
    };
    std::vector<FirstLevel> results(static_cast<std::size_t>(nc));

#ifdef _OPENMP
    const int threads = workers == 0 ? omp_get_max_threads() : workers;
#else
    const int threads = 1;
    (void)workers;
#endif

    // Degenerate shapes (K=1 under the node guard) can have millions of
    // first-level choices; splitting those is all overhead.
    if (threads <= 1 || nc > 4096) {
      CtaSearch search(s, mode, order, suffix, &incumbent);
      search.dfs(0);
      best = search.best;
      best_choices = search.best_choice;
    } else {
#pragma omp parallel num_threads(threads)
      {
        CtaSearch search(s, mode, order, suffix, &incumbent);
#pragma omp for schedule(dynamic)
        for (int c = 0; c < nc; ++c) {
          search.reset();
          search.choice[0] = c;
          bool feasible = true;
          const int task = order[0];
          const std::int64_t reward = s.task(task).reward.units();
          if (c != 0) {
            if (mode == CtaMode::pruned) {
              feasible = search.user_feasible(c, task);
              if (feasible) search.current = reward - search.apply_user(c, task);
            } else {
              for (int i = 1; i <= I && feasible; ++i)
                if ((c >> (i - 1)) & 1) feasible = search.user_feasible(i, task);
              if (feasible) {
                std::int64_t cost = 0;
                for (int i = 1; i <= I; ++i)
                  if ((c >> (i - 1)) & 1) cost += search.apply_user(i, task);
                search.current = reward - cost;
              }
            }
          }
          if (feasible) {
            search.dfs(1);
            results[static_cast<std::size_t>(c)] = {search.best, search.best_choice};
          }
        }
      }
      best = std::numeric_limits<std::int64_t>::min();
      for (const FirstLevel& r : results) {
        if (r.value > best) {
          best = r.value;
          best_choices = r.choices;
        }
      }
    }
  }

  CtaResult res;
  res.allocation = allocation_from_choices(s, mode, order, best_choices);
  const StrategyProfile p = induced_profile(s, res.allocation);
  res.surplus = surplus(s, p);
  if (res.surplus.surplus.units() != best)
    throw std::logic_error("exact solver accounting mismatch");
  return res;
}

void write_allocation(std::ostream& out, const Scenario& s, const Allocation& a) {
  out << "# task\tuser\n";
  for (int k = 1; k <= s.num_tasks(); ++k) {
    out << k << '\t';
    bool any = false;
    for (int i = 1; i <= s.num_users(); ++i)
      if (a.assigned(i, k)) {
        if (any) out << ';';
        out << i;
        any = true;
      }
    if (!any) out << "none";
    out << '\n';
  }
}

}  // namespace tsg

#include "tsg/routing.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <stdexcept>

namespace tsg {

namespace {

// Route-order comparison: (time, task-id) pairs elementwise, shorter prefix
// first. Used for deterministic tie-breaking among equal-payoff paths.
bool lex_less(const std::vector<TaskTimePoint>& a, const std::vector<TaskTimePoint>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].time != b[i].time) return a[i].time < b[i].time;
    if (a[i].task != b[i].task) return a[i].task < b[i].task;
  }
  return a.size() < b.size();
}

bool point_order(TaskTimePoint a, TaskTimePoint b) {
  return a.time != b.time ? a.time < b.time : a.task < b.task;
}

}  // namespace

bool Route::contains(TaskTimePoint p) const {
  return std::find(points.begin(), points.end(), p) != points.end();
}

Route stay_home_route(const Scenario& s, int user_id) {
  return Route{user_id, {{s.virtual_task(user_id), 1}}};
}

Money route_cost(const Scenario& s, const Route& r) {
  Money total;
  for (std::size_t a = 0; a + 1 < r.points.size(); ++a)
    total += s.travel_cost(r.owner, s.task_location(r.points[a].task),
                           s.task_location(r.points[a + 1].task));
  return total;
}

std::vector<int> worked_tasks(const Scenario& s, const Route& r) {
  std::vector<int> out;
  for (const TaskTimePoint& p : r.points)
    if (s.rewarded(p)) out.push_back(p.task);
  return out;
}

std::vector<RouteViolation> validate_route(const Scenario& s, const Route& r) {
  std::vector<RouteViolation> v;
  if (r.points.empty()) {
    v.push_back({1, "route has no points"});
    return v;
  }
  if (r.points.front().time != 1)
    v.push_back({1, "route must start at slot 1"});
  for (std::size_t a = 0; a + 1 < r.points.size(); ++a)
    if (r.points[a + 1].time <= r.points[a].time) {
      v.push_back({1, "times must strictly increase"});
      break;
    }
  if (r.points.back().time > s.horizon())
    v.push_back({1, "route exceeds the horizon"});

  for (const TaskTimePoint& p : r.points) {
    if (p.task < 1 || p.task > s.num_tasks() + s.num_users()) {
      v.push_back({2, "unknown task " + std::to_string(p.task)});
      continue;
    }
    if (!s.is_eligible(r.owner, p.task))
      v.push_back({2, "user " + std::to_string(r.owner) + " is not eligible for task " +
                          std::to_string(p.task)});
  }

  if (r.points.front().task != s.virtual_task(r.owner))
    v.push_back({3, "route must start at the owner's virtual task"});

  for (std::size_t a = 0; a + 1 < r.points.size(); ++a) {
    const TaskTimePoint& p = r.points[a];
    const TaskTimePoint& q = r.points[a + 1];
    if (p.task < 1 || p.task > s.num_tasks() + s.num_users() || q.task < 1 ||
        q.task > s.num_tasks() + s.num_users())
      continue;
    const int gap = q.time - p.time;
    const int need = s.travel_slots(r.owner, s.task_location(p.task), s.task_location(q.task));
    if (gap != need)
      v.push_back({4, "gap " + std::to_string(gap) + " between (" + std::to_string(p.task) +
                          "," + std::to_string(p.time) + ") and (" + std::to_string(q.task) +
                          "," + std::to_string(q.time) + ") must equal movement time " +
                          std::to_string(need)});
  }
  return v;
}

double payoff_against(const Scenario& s, const Route& route, const RewardShares& others) {
  double reward = 0.0;
  for (const TaskTimePoint& p : route.points) {
    const Money r = s.rho_star(p);
    if (!r.is_zero()) reward += r.to_double() / (others.count(p.task) + 1);
  }
  return reward - route_cost(s, route).to_double();
}

int RouteGraph::index_of(TaskTimePoint p) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), p,
                             [](const Vertex& v, TaskTimePoint q) { return point_order(v.point, q); });
  if (it == vertices.end() || !(it->point == p)) return -1;
  return static_cast<int>(it - vertices.begin());
}

RouteGraph build_route_graph(const Scenario& s, int user_id, const RewardShares& others) {
  const int T = s.horizon();
  const auto eligible = s.eligible(user_id);

  // Reachability closure from (virtual, 1) under Definition-3 moves.
  std::vector<TaskTimePoint> frontier{{s.virtual_task(user_id), 1}};
  std::map<TaskTimePoint, bool> seen{{frontier[0], true}};
  while (!frontier.empty()) {
    const TaskTimePoint p = frontier.back();
    frontier.pop_back();
    const int from = s.task_location(p.task);
    for (int k : eligible) {
      const TaskTimePoint q{k, p.time + s.travel_slots(user_id, from, s.task_location(k))};
      if (q.time > T) continue;
      if (seen.emplace(q, true).second) frontier.push_back(q);
    }
  }

  RouteGraph g;
  g.user = user_id;
  g.vertices.reserve(seen.size());
  for (const auto& [p, _] : seen) g.vertices.push_back({p, 0.0});
  std::sort(g.vertices.begin(), g.vertices.end(),
            [](const RouteGraph::Vertex& a, const RouteGraph::Vertex& b) {
              return point_order(a.point, b.point);
            });
  for (auto& v : g.vertices) {
    const Money r = s.rho_star(v.point);
    if (!r.is_zero()) v.theta = r.to_double() / (others.count(v.point.task) + 1);
  }
  g.start = g.index_of({s.virtual_task(user_id), 1});

  g.out.resize(g.vertices.size());
  g.weight.resize(g.vertices.size());
  for (std::size_t u = 0; u < g.vertices.size(); ++u) {
    const TaskTimePoint p = g.vertices[u].point;
    const int from = s.task_location(p.task);
    for (int k : eligible) {
      const int to = s.task_location(k);
      const TaskTimePoint q{k, p.time + s.travel_slots(user_id, from, to)};
      if (q.time > T) continue;
      const int v = g.index_of(q);
      g.out[u].push_back(v);
      g.weight[u].push_back(-s.travel_cost(user_id, from, to).to_double());
    }
  }
  return g;
}

SplitGraph build_split_graph(const RouteGraph& g) {
  SplitGraph sg;
  sg.user = g.user;
  sg.start = 2 * g.start;
  sg.vertices.resize(2 * g.vertices.size());
  sg.out.resize(sg.vertices.size());
  sg.weight.resize(sg.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    sg.vertices[2 * i] = {g.vertices[i].point, 0};
    sg.vertices[2 * i + 1] = {g.vertices[i].point, 1};
    // internal edge carries the vertex value
    sg.out[2 * i].push_back(static_cast<int>(2 * i + 1));
    sg.weight[2 * i].push_back(g.vertices[i].theta);
    for (std::size_t e = 0; e < g.out[i].size(); ++e) {
      sg.out[2 * i + 1].push_back(2 * g.out[i][e]);
      sg.weight[2 * i + 1].push_back(g.weight[i][e]);
    }
  }
  return sg;
}

void write_dot(std::ostream& out, const SplitGraph& g) {
  out << "digraph split_route_graph {\n  rankdir=LR;\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& v = g.vertices[i];
    out << "  v" << i << " [label=\"(" << v.point.task << "," << v.point.time << ","
        << v.gamma << ")\"";
    if (static_cast<int>(i) == g.start) out << " shape=doublecircle";
    out << "];\n";
  }
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t e = 0; e < g.out[i].size(); ++e)
      out << "  v" << i << " -> v" << g.out[i][e] << " [label=\"" << g.weight[i][e]
          << "\"];\n";
  out << "}\n";
}

BestResponse best_response(const Scenario& s, int user_id, const RewardShares& others) {
  const RouteGraph g = build_route_graph(s, user_id, others);
  const SplitGraph sg = build_split_graph(g);

  // Longest path from the start vertex; vertices are already topologically
  // ordered (time, then the gamma-0/gamma-1 pair). Per vertex we keep the
  // best value and the lexicographically smallest route achieving it; a
  // common suffix cannot flip that comparison, so local tie-breaking is safe.
  const double unreached = -std::numeric_limits<double>::infinity();
  std::vector<double> value(sg.vertices.size(), unreached);
  std::vector<std::vector<TaskTimePoint>> route(sg.vertices.size());
  value[sg.start] = 0.0;
  route[sg.start] = {sg.vertices[sg.start].point};

  for (std::size_t u = 0; u < sg.vertices.size(); ++u) {
    if (value[u] == unreached) continue;
    for (std::size_t e = 0; e < sg.out[u].size(); ++e) {
      const int v = sg.out[u][e];
      const double cand = value[u] + sg.weight[u][e];
      std::vector<TaskTimePoint> cand_route = route[u];
      if (sg.vertices[v].gamma == 0) cand_route.push_back(sg.vertices[v].point);
      if (cand > value[v] ||
          (cand == value[v] && lex_less(cand_route, route[v]))) {
        value[v] = cand;
        route[v] = std::move(cand_route);
      }
    }
  }

  // Only gamma-1 endpoints value their final vertex; pick the best of them.
  int best = -1;
  for (std::size_t v = 0; v < sg.vertices.size(); ++v) {
    if (sg.vertices[v].gamma != 1 || value[v] == unreached) continue;
    if (best < 0 || value[v] > value[best] ||
        (value[v] == value[best] && lex_less(route[v], route[best])))
      best = static_cast<int>(v);
  }

  BestResponse br;
  br.route = Route{user_id, route[best]};
  br.payoff = payoff_against(s, br.route, others);
  return br;
}

std::vector<Route> enumerate_routes(const Scenario& s, int user_id, std::size_t node_limit) {
  const int T = s.horizon();
  const auto eligible = s.eligible(user_id);
  std::vector<Route> all;
  std::vector<TaskTimePoint> stack{{s.virtual_task(user_id), 1}};
  std::size_t nodes = 0;

  // Every prefix of the expansion is itself a feasible route.
  auto expand = [&](auto&& self) -> void {
    if (++nodes > node_limit)
      throw std::runtime_error("route enumeration oracle too large (over " +
                               std::to_string(node_limit) + " nodes)");
    all.push_back(Route{user_id, stack});
    const TaskTimePoint p = stack.back();
    const int from = s.task_location(p.task);
    for (int k : eligible) {
      const int t = p.time + s.travel_slots(user_id, from, s.task_location(k));
      if (t > T) continue;
      stack.push_back({k, t});
      self(self);
      stack.pop_back();
    }
  };
  expand(expand);
  return all;
}

}  // namespace tsg

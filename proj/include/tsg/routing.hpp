#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tsg/core_model.hpp"

namespace tsg {

// A feasible task-time route: the strategy of one user. Point times strictly
// increase from slot 1, the head is the owner's virtual task, and consecutive
// gaps equal the owner's movement times.
struct Route {
  int owner = 0;
  std::vector<TaskTimePoint> points;

  bool contains(TaskTimePoint p) const;
  friend bool operator==(const Route&, const Route&) = default;
};

// The minimal route: sit on the virtual task at slot 1.
Route stay_home_route(const Scenario& s, int user_id);

// Total movement cost along the route's consecutive pairs (exact).
Money route_cost(const Scenario& s, const Route& r);

// Real tasks the route actually works on (visits at the execution slot), in
// route order.
std::vector<int> worked_tasks(const Scenario& s, const Route& r);

struct RouteViolation {
  int condition = 0;  // 1 time order, 2 eligibility, 3 virtual start, 4 movement gaps
  std::string detail;
};

// Empty result iff the route is feasible for its owner.
std::vector<RouteViolation> validate_route(const Scenario& s, const Route& r);

// Payoff of `route` when the other users' claims on rewarded points are
// `others`: sum of rho*/(q+1) over visited rewarded points minus movement
// cost. This is the quantity a best response maximizes.
double payoff_against(const Scenario& s, const Route& route, const RewardShares& others);

// Reachable task-time points of one user with per-vertex values
// theta((k,t)) = rho*[k,t] / (q_{-j} + 1) and movement edges weighted by
// -cost. Acyclic by construction: every edge strictly increases time.
struct RouteGraph {
  struct Vertex {
    TaskTimePoint point;
    double theta = 0.0;
  };
  int user = 0;
  int start = 0;                                   // index of (virtual, 1)
  std::vector<Vertex> vertices;                    // sorted by (time, task)
  std::vector<std::vector<int>> out;               // adjacency by vertex index
  std::vector<std::vector<double>> weight;         // parallel to `out`, -cost

  int index_of(TaskTimePoint p) const;             // -1 when absent
};

RouteGraph build_route_graph(const Scenario& s, int user_id, const RewardShares& others);

// Vertex-split form: (k,t) becomes (k,t,0) -> (k,t,1) with the internal edge
// carrying theta, so path weight alone values a route and a plain
// longest-path pass solves the best response.
struct SplitGraph {
  struct Vertex {
    TaskTimePoint point;
    int gamma = 0;
  };
  int user = 0;
  int start = 0;                                   // (virtual, 1, 0)
  std::vector<Vertex> vertices;                    // topological order
  std::vector<std::vector<int>> out;
  std::vector<std::vector<double>> weight;
};

SplitGraph build_split_graph(const RouteGraph& g);

// Graphviz dump for visual inspection.
void write_dot(std::ostream& out, const SplitGraph& g);

struct BestResponse {
  Route route;
  double payoff = 0.0;  // Eq-style payoff recomputed on the returned route
};

// Exact best response via topological longest path over the split graph.
// Ties between equal-payoff routes break toward the lexicographically
// smallest (time, task-id) sequence. The all-waiting route (payoff 0) is
// always available, so the result never pays to participate.
BestResponse best_response(const Scenario& s, int user_id, const RewardShares& others);

// Exhaustive route set of one user by depth-first expansion; testing oracle.
// Throws when the expansion exceeds `node_limit` visited nodes.
std::vector<Route> enumerate_routes(const Scenario& s, int user_id,
                                    std::size_t node_limit = 1'000'000);

}  // namespace tsg

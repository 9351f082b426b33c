#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "helpers.hpp"
#include "tsg/baselines.hpp"
#include "tsg/central.hpp"
#include "tsg/scenario_gen.hpp"

using namespace tsg;
using test::make_simple;
using test::SimpleSpec;

TEST_CASE("surplus accounting") {
  SUBCASE("nothing covered, nothing spent") {
    const Scenario s = test::small_random_scenario(3);
    const Surplus sp = surplus(s, StrategyProfile::all_stay_home(s));
    CHECK(sp.reward.is_zero());
    CHECK(sp.cost.is_zero());
    CHECK(sp.surplus.is_zero());
  }
  SUBCASE("two users on one task: reward once, costs add") {
    SimpleSpec spec;
    spec.horizon = 5;
    spec.num_locations = 3;
    spec.tasks = {{1, 3, 10.0}};
    spec.user_locations = {2, 3};
    spec.time_table = {1, 1, 1, 1, 1, 1, 1, 1, 1};
    spec.cost_table = {0, 2, 3, 2, 0, 9, 3, 9, 0};
    ScenarioData d = make_simple(spec).data();
    // user 2 pays 3 for the same hop
    d.tables->cost[1] = {Money{}, Money::from_double(2), Money::from_double(3),
                         Money::from_double(2), Money{}, Money::from_double(9),
                         Money::from_double(3), Money::from_double(9), Money{}};
    const Scenario s(std::move(d));
    StrategyProfile p = StrategyProfile::all_stay_home(s);
    p.set_route(s, Route{1, {{s.virtual_task(1), 1}, {1, 2}, {1, 3}}});
    p.set_route(s, Route{2, {{s.virtual_task(2), 1}, {1, 2}, {1, 3}}});
    const Surplus sp = surplus(s, p);
    CHECK(sp.reward == Money::from_double(10.0));
    CHECK(sp.cost == Money::from_double(5.0));
    CHECK(sp.surplus == Money::from_double(5.0));
  }
}

TEST_CASE("surplus equals the sum of payoffs on random profiles") {
  for (std::uint64_t seed = 60; seed < 80; ++seed) {
    const Scenario s = test::small_random_scenario(seed, 4, 4, 8, 5);
    std::mt19937_64 rng(seed);
    StrategyProfile p = StrategyProfile::all_stay_home(s);
    for (int i = 1; i <= s.num_users(); ++i) {
      const auto routes = enumerate_routes(s, i);
      p.set_route(s, routes[uniform_index(rng, routes.size())]);
    }
    double total = 0.0;
    for (int i = 1; i <= s.num_users(); ++i) total += payoff(s, p, i);
    CHECK(surplus(s, p).surplus.to_double() == doctest::Approx(total).epsilon(1e-9));
  }
}

TEST_CASE("greedy centralized basics") {
  SUBCASE("a single user takes a single reachable profitable task") {
    SimpleSpec spec;
    spec.horizon = 5;
    spec.num_locations = 2;
    spec.tasks = {{2, 3, 10.0}};
    spec.user_locations = {1};
    spec.cost_table = {0, 2, 2, 0};
    const Scenario s = make_simple(spec);
    const Allocation a = greedy_centralized(s);
    CHECK(a.assignee(1) == 1);
    CHECK(validate_route(s, a.routes[0]).empty());
  }
  SUBCASE("a task cheaper than every approach stays unassigned") {
    SimpleSpec spec;
    spec.horizon = 5;
    spec.num_locations = 2;
    spec.tasks = {{2, 3, 1.0}};
    spec.user_locations = {1, 1};
    spec.cost_table = {0, 5, 5, 0};
    const Scenario s = make_simple(spec);
    const Allocation a = greedy_centralized(s);
    CHECK(a.assignee(1) == -1);
  }
}

TEST_CASE("greedy centralized on the real-world example") {
  const Scenario s = real_world_fixture();
  const Allocation a = greedy_centralized(s);
  CHECK(a.tasks_of_user[0] == std::vector<int>{3});
  CHECK(a.tasks_of_user[1] == std::vector<int>{1, 2});
  CHECK(a.tasks_of_user[2].empty());
  for (const Route& r : a.routes) CHECK(validate_route(s, r).empty());

  const StrategyProfile p = induced_profile(s, a);
  CHECK(surplus(s, p).surplus == Money::from_double(33.0));
}

TEST_CASE("greedy centralized induced routes are feasible with increasing times") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    const Scenario s = test::small_random_scenario(seed, 5, 6, 10, 6);
    const Allocation a = greedy_centralized(s);
    for (int i = 1; i <= s.num_users(); ++i) {
      CHECK(validate_route(s, a.routes[static_cast<std::size_t>(i) - 1]).empty());
      const auto& tasks = a.tasks_of_user[static_cast<std::size_t>(i) - 1];
      for (std::size_t j = 0; j + 1 < tasks.size(); ++j) {
        const int gap = s.task(tasks[j + 1]).execution_time - s.task(tasks[j]).execution_time;
        CHECK(gap >= s.travel_slots(i, s.task(tasks[j]).location, s.task(tasks[j + 1]).location));
      }
    }
  }
}

TEST_CASE("exact solver") {
  SUBCASE("no profitable task leaves the empty allocation at surplus zero") {
    SimpleSpec spec;
    spec.horizon = 4;
    spec.num_locations = 2;
    spec.tasks = {{2, 3, 1.0}};
    spec.user_locations = {1};
    spec.cost_table = {0, 5, 5, 0};
    const Scenario s = make_simple(spec);
    const CtaResult r = exact_cta(s);
    CHECK(r.surplus.surplus.is_zero());
    CHECK(r.allocation.assignee(1) == -1);
  }
  SUBCASE("the real-world example matches the greedy outcome") {
    const Scenario s = real_world_fixture();
    const CtaResult r = exact_cta(s);
    CHECK(r.surplus.surplus == Money::from_double(33.0));
  }
  SUBCASE("the guard rejects oversized instances") {
    GenConfig cfg;
    cfg.num_users = 30;
    cfg.num_tasks = 10;
    cfg.seed = 1;
    const Scenario s = generate(cfg);
    CHECK_THROWS_AS(exact_cta(s), std::runtime_error);
  }
  SUBCASE("pruned mode refuses scenarios violating the triangle property") {
    SimpleSpec spec;
    spec.horizon = 4;
    spec.num_locations = 3;
    spec.tasks = {{1, 3, 5.0}};
    spec.user_locations = {2};
    spec.cost_table = {0, 1, 5, 1, 0, 1, 5, 1, 0};
    const Scenario s = make_simple(spec);
    REQUIRE_FALSE(s.triangle_ok());
    CHECK_THROWS_AS(exact_cta(s, CtaMode::pruned), std::invalid_argument);
    CHECK_NOTHROW(exact_cta(s, CtaMode::unrestricted));
  }
}

TEST_CASE("pruned search equals unrestricted brute force under the triangle property") {
  for (std::uint64_t seed = 900; seed < 930; ++seed) {
    const Scenario s = test::small_random_scenario(seed, 3, 3, 6, 4);
    REQUIRE(s.triangle_ok());
    const CtaResult pruned = exact_cta(s, CtaMode::pruned);
    const CtaResult full = exact_cta(s, CtaMode::unrestricted);
    CHECK(pruned.surplus.surplus == full.surplus.surplus);
  }
}

TEST_CASE("parallel search returns exactly the single-worker result") {
  for (std::uint64_t seed = 1000; seed < 1010; ++seed) {
    GenConfig cfg;
    cfg.num_users = 4;
    cfg.num_tasks = 5;
    cfg.cost_coefficient = Money::from_double(1.0);
    cfg.seed = seed;
    const Scenario s = generate(cfg);
    const CtaResult serial = exact_cta(s, CtaMode::pruned, 1);
    const CtaResult parallel = exact_cta(s, CtaMode::pruned, 0);
    CHECK(serial.surplus.surplus == parallel.surplus.surplus);
    CHECK(serial.allocation.y == parallel.allocation.y);
  }
}

TEST_CASE("solver dominance: exact at least greedy, greedy nonnegative") {
  for (std::uint64_t seed = 1100; seed < 1130; ++seed) {
    const Scenario s = test::small_random_scenario(seed, 4, 4, 8, 5);
    const CtaResult exact = exact_cta(s);
    const Surplus greedy = surplus(s, induced_profile(s, greedy_centralized(s)));
    CHECK(exact.surplus.surplus >= greedy.surplus);
    CHECK(greedy.surplus >= Money{});
  }
}

TEST_CASE("allocation export lists every task") {
  const Scenario s = real_world_fixture();
  const Allocation a = greedy_centralized(s);
  std::ostringstream out;
  write_allocation(out, s, a);
  CHECK(out.str() == "# task\tuser\n1\t2\n2\t2\n3\t1\n");
}

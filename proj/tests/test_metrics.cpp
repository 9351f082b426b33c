#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "tsg/adts.hpp"
#include "tsg/baselines.hpp"
#include "tsg/metrics.hpp"
#include "tsg/scenario_gen.hpp"

using namespace tsg;
using test::make_simple;
using test::SimpleSpec;

TEST_CASE("jain index") {
  CHECK(jain_index({1, 1, 1}) == doctest::Approx(1.0));
  CHECK(jain_index({5, 0, 0}) == doctest::Approx(1.0 / 3));
  CHECK(jain_index({0, 0, 0}) == doctest::Approx(1.0));  // all-zero convention
  // the uncoordinated scheme's payoff split on the real-world example
  CHECK(jain_index({25.0 / 3 - 4, 25.0 / 3, 25.0 / 3}) == doctest::Approx(0.93).epsilon(0.005));
}

TEST_CASE("jain index is scale invariant") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> u;
    for (int i = 0; i < 6; ++i) u.push_back(uniform_unit(rng) * 20 - 5);
    const double base = jain_index(u);
    for (double c : {0.5, 2.0, 13.0}) {
      std::vector<double> scaled = u;
      for (double& x : scaled) x *= c;
      CHECK(jain_index(scaled) == doctest::Approx(base).epsilon(1e-9));
    }
  }
}

TEST_CASE("coverage counts tasks with at least one measurement") {
  const Scenario s = real_world_fixture();
  SUBCASE("none") { CHECK(coverage(s, StrategyProfile::all_stay_home(s)) == doctest::Approx(0.0)); }
  SUBCASE("uncoordinated greedy reaches two of three") {
    CHECK(coverage(s, greedy_distributed(s)) == doctest::Approx(2.0 / 3));
  }
  SUBCASE("the dynamics cover everything") {
    CHECK(coverage(s, run_adts(s, {}).final_profile) == doctest::Approx(1.0));
  }
  SUBCASE("allocation overload agrees with the profile overload") {
    const Allocation a = greedy_centralized(s);
    CHECK(coverage(s, a) == coverage(s, induced_profile(s, a)));
  }
}

TEST_CASE("reward per measurement") {
  SimpleSpec spec;
  spec.horizon = 4;
  spec.num_locations = 1;
  spec.tasks = {{1, 3, 10.0}};
  spec.user_locations = {1, 1};
  const Scenario s = make_simple(spec);

  StrategyProfile p = StrategyProfile::all_stay_home(s);
  SUBCASE("undefined without measurements") {
    CHECK_THROWS_AS(reward_per_measurement(s, p), std::domain_error);
  }
  Route onto{1, {{s.virtual_task(1), 1}, {1, 2}, {1, 3}}};
  p.set_route(s, onto);
  SUBCASE("one user, one task: the full reward") {
    CHECK(reward_per_measurement(s, p) == doctest::Approx(10.0));
  }
  SUBCASE("two users sharing halve it") {
    p.set_route(s, Route{2, {{s.virtual_task(2), 1}, {1, 2}, {1, 3}}});
    CHECK(reward_per_measurement(s, p) == doctest::Approx(5.0));
  }
}

TEST_CASE("single-assignment outputs disburse full rewards per measurement") {
  for (std::uint64_t seed = 700; seed < 720; ++seed) {
    const Scenario s = test::small_random_scenario(seed, 4, 4, 8, 5);
    const StrategyProfile p = induced_profile(s, greedy_centralized(s));
    Money sum;
    int covered = 0;
    for (int k = 1; k <= s.num_tasks(); ++k)
      if (p.share({k, s.task(k).execution_time}) >= 1) {
        sum += s.task(k).reward;
        ++covered;
      }
    if (covered == 0) continue;
    CHECK(reward_per_measurement(s, p) == doctest::Approx(sum.to_double() / covered));
  }
}

TEST_CASE("run reports carry consistent aggregates") {
  const Scenario s = real_world_fixture();
  const RunReport rep = make_report(s, greedy_distributed(s), "gd", 9);
  CHECK(rep.scheme == "gd");
  CHECK(rep.payoffs.size() == 3);
  CHECK(rep.avg_payoff == doctest::Approx(7.0));
  CHECK(rep.coverage == doctest::Approx(2.0 / 3));
  CHECK(rep.jain == doctest::Approx(0.93).epsilon(0.005));
  CHECK_FALSE(rep.jain_all_zero);
  REQUIRE(rep.reward_per_measurement.has_value());
  CHECK(*rep.reward_per_measurement == doctest::Approx(25.0 / 6));
  CHECK(rep.surplus == doctest::Approx(21.0));
  CHECK_FALSE(rep.iterations_to_converge.has_value());

  const RunReport idle = make_report(s, StrategyProfile::all_stay_home(s), "gd", 9);
  CHECK(idle.jain_all_zero);
  CHECK(idle.jain == doctest::Approx(1.0));
  CHECK_FALSE(idle.reward_per_measurement.has_value());
}

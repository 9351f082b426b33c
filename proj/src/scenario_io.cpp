#include "tsg/scenario_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tsg {

namespace {

using nlohmann::json;

json money_json(Money m) { return m.str(); }

Money money_from(const json& j, const std::string& what) {
  if (j.is_number()) return Money::from_double(j.get<double>());
  if (j.is_string()) {
    if (auto m = Money::parse(j.get<std::string>())) return *m;
  }
  throw std::invalid_argument("scenario file: bad money value for " + what);
}

// row-major per-user matrix -> nested L x L rows
json matrix_json(const std::vector<int>& flat, std::size_t L) {
  json rows = json::array();
  for (std::size_t a = 0; a < L; ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < L; ++b) row.push_back(flat[a * L + b]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

void write_scenario(std::ostream& out, const Scenario& s) {
  const ScenarioData& d = s.data();
  json j;
  j["schema_version"] = 1;
  j["horizon"] = d.horizon;
  j["slot_length"] = d.slot_minutes;

  json locs = json::array();
  for (const Location& l : d.locations) {
    json jl{{"id", l.id}};
    if (l.position) jl["position"] = {l.position->x, l.position->y};
    locs.push_back(std::move(jl));
  }
  j["locations"] = std::move(locs);

  json tasks = json::array();
  for (const Task& t : d.tasks)
    tasks.push_back({{"id", t.id},
                     {"location", t.location},
                     {"execution_time", t.execution_time},
                     {"reward", money_json(t.reward)},
                     {"reputation_threshold", t.reputation_threshold}});
  j["tasks"] = std::move(tasks);

  json users = json::array();
  for (const User& u : d.users)
    users.push_back({{"id", u.id},
                     {"initial_location", u.initial_location},
                     {"speed", u.speed},
                     {"cost_coefficient", money_json(u.cost_coefficient)},
                     {"reputation", u.reputation}});
  j["users"] = std::move(users);

  if (!d.tables) {
    j["movement_time"] = "geometric";
    j["movement_cost"] = "geometric";
  } else {
    const std::size_t L = d.locations.size();
    json time = json::object();
    json cost = json::object();
    for (std::size_t i = 0; i < d.tables->time.size(); ++i) {
      time[std::to_string(i + 1)] = matrix_json(d.tables->time[i], L);
      json rows = json::array();
      for (std::size_t a = 0; a < L; ++a) {
        json row = json::array();
        for (std::size_t b = 0; b < L; ++b)
          row.push_back(money_json(d.tables->cost[i][a * L + b]));
        rows.push_back(std::move(row));
      }
      cost[std::to_string(i + 1)] = std::move(rows);
    }
    j["movement_time"] = std::move(time);
    j["movement_cost"] = std::move(cost);
  }

  out << j.dump(2) << '\n';
}

std::string scenario_to_string(const Scenario& s) {
  std::ostringstream out;
  write_scenario(out, s);
  return out.str();
}

Scenario read_scenario(std::istream& in, bool strict_triangle) {
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("scenario file: ") + e.what());
  }
  if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
    throw std::invalid_argument("scenario file: unsupported schema_version");

  ScenarioData d;
  d.horizon = j.at("horizon").get<int>();
  d.slot_minutes = j.at("slot_length").get<double>();

  for (const json& jl : j.at("locations")) {
    Location l;
    l.id = jl.at("id").get<int>();
    if (jl.contains("position")) {
      const auto& p = jl["position"];
      l.position = Vec2{p.at(0).get<double>(), p.at(1).get<double>()};
    }
    d.locations.push_back(l);
  }
  for (const json& jt : j.at("tasks")) {
    Task t;
    t.id = jt.at("id").get<int>();
    t.location = jt.at("location").get<int>();
    t.execution_time = jt.at("execution_time").get<int>();
    t.reward = money_from(jt.at("reward"), "task reward");
    t.reputation_threshold = jt.at("reputation_threshold").get<int>();
    d.tasks.push_back(t);
  }
  for (const json& ju : j.at("users")) {
    User u;
    u.id = ju.at("id").get<int>();
    u.initial_location = ju.at("initial_location").get<int>();
    u.speed = ju.at("speed").get<double>();
    u.cost_coefficient = money_from(ju.at("cost_coefficient"), "user cost_coefficient");
    u.reputation = ju.at("reputation").get<int>();
    d.users.push_back(u);
  }

  const json& mt = j.at("movement_time");
  const json& mc = j.at("movement_cost");
  const bool geo_t = mt.is_string() && mt.get<std::string>() == "geometric";
  const bool geo_c = mc.is_string() && mc.get<std::string>() == "geometric";
  if (geo_t != geo_c)
    throw std::invalid_argument(
        "scenario file: movement_time and movement_cost must both be geometric or both explicit");
  if (!geo_t) {
    ExplicitTables tables;
    const std::size_t L = d.locations.size();
    for (std::size_t i = 1; i <= d.users.size(); ++i) {
      const std::string key = std::to_string(i);
      if (!mt.contains(key) || !mc.contains(key))
        throw std::invalid_argument("scenario file: missing movement tables for user " + key);
      std::vector<int> time;
      std::vector<Money> cost;
      time.reserve(L * L);
      cost.reserve(L * L);
      for (const json& row : mt[key])
        for (const json& v : row) time.push_back(v.get<int>());
      for (const json& row : mc[key])
        for (const json& v : row) cost.push_back(money_from(v, "movement_cost"));
      tables.time.push_back(std::move(time));
      tables.cost.push_back(std::move(cost));
    }
    d.tables = std::move(tables);
  }
  return Scenario(std::move(d), strict_triangle);
}

Scenario read_scenario_file(const std::string& path, bool strict_triangle) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open scenario file " + path);
  return read_scenario(in, strict_triangle);
}

void write_scenario_file(const std::string& path, const Scenario& s) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write scenario file " + path);
  write_scenario(out, s);
}

}  // namespace tsg

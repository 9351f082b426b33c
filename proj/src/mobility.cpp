#include "tsg/mobility.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tsg {

int geometric_movement_time(double dist_km, double speed_km_per_min, double slot_minutes) {
  if (speed_km_per_min <= 0) throw std::invalid_argument("movement speed must be positive");
  if (slot_minutes <= 0) throw std::invalid_argument("slot length must be positive");
  if (dist_km < 0) throw std::invalid_argument("distance must be nonnegative");
  const int slots = static_cast<int>(std::ceil(dist_km / (speed_km_per_min * slot_minutes) - 1e-9));
  return std::max(1, slots);
}

Money geometric_movement_cost(double dist_km, Money cost_coefficient) {
  if (dist_km < 0) throw std::invalid_argument("distance must be nonnegative");
  return Money::from_double_ceil(cost_coefficient.to_double() * dist_km);
}

MovementDoc parse_movement_doc(std::istream& in) {
  MovementDoc doc;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    MovementDoc::Row row;
    std::string cost;
    if (!(ss >> row.mode >> row.from >> row.to >> row.minutes >> cost))
      throw std::invalid_argument("movement table line " + std::to_string(lineno) +
                                  ": expected 'mode from to minutes cost'");
    const auto money = Money::parse(cost);
    if (!money)
      throw std::invalid_argument("movement table line " + std::to_string(lineno) +
                                  ": bad cost '" + cost + "'");
    row.cost = *money;
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

void write_movement_doc(std::ostream& out, const MovementDoc& doc) {
  out << "# mode\tfrom\tto\tminutes\tcost\n";
  for (const auto& r : doc.rows) {
    std::ostringstream minutes;
    minutes << r.minutes;
    out << r.mode << '\t' << r.from << '\t' << r.to << '\t' << minutes.str() << '\t'
        << r.cost.str() << '\n';
  }
}

std::map<std::string, MovementTable> ingest_movement_table(const MovementDoc& doc,
                                                           int num_locations,
                                                           double slot_minutes) {
  if (slot_minutes <= 0) throw std::invalid_argument("slot length must be positive");
  const int L = num_locations;
  std::map<std::string, MovementTable> tables;
  std::map<std::string, std::vector<char>> seen;
  for (const auto& r : doc.rows) {
    if (r.from < 1 || r.from > L || r.to < 1 || r.to > L)
      throw std::invalid_argument("movement table: location pair (" + std::to_string(r.from) +
                                  "," + std::to_string(r.to) + ") outside 1.." +
                                  std::to_string(L));
    auto [it, inserted] = tables.try_emplace(r.mode);
    if (inserted) {
      it->second.num_locations = L;
      it->second.time.assign(static_cast<std::size_t>(L) * L, 0);
      it->second.cost.assign(static_cast<std::size_t>(L) * L, Money{});
      seen[r.mode].assign(static_cast<std::size_t>(L) * L, 0);
    }
    const std::size_t idx = static_cast<std::size_t>(r.from - 1) * L + (r.to - 1);
    const int slots =
        std::max(1, static_cast<int>(std::ceil(r.minutes / slot_minutes - 1e-9)));
    it->second.time[idx] = slots;
    it->second.cost[idx] = r.cost;
    seen[r.mode][idx] = 1;
  }
  for (auto& [mode, table] : tables) {
    for (int a = 1; a <= L; ++a) {
      // staying convention overrides whatever the document says
      const std::size_t diag = static_cast<std::size_t>(a - 1) * L + (a - 1);
      table.time[diag] = 1;
      table.cost[diag] = Money{};
      for (int b = 1; b <= L; ++b) {
        if (a == b) continue;
        if (!seen[mode][static_cast<std::size_t>(a - 1) * L + (b - 1)])
          throw std::invalid_argument("movement table: missing entry (" + mode + ", " +
                                      std::to_string(a) + ", " + std::to_string(b) + ")");
      }
    }
  }
  return tables;
}

MovementDoc emit_movement_doc(const std::map<std::string, MovementTable>& tables,
                              double slot_minutes) {
  MovementDoc doc;
  for (const auto& [mode, table] : tables) {
    const int L = table.num_locations;
    for (int a = 1; a <= L; ++a)
      for (int b = 1; b <= L; ++b) {
        if (a == b) continue;
        doc.rows.push_back({mode, a, b, table.slots(a, b) * slot_minutes, table.money(a, b)});
      }
  }
  return doc;
}

}  // namespace tsg

#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "tsg/money.hpp"

namespace tsg {

// Slots needed to cover dist_km at speed km/min with slots of slot_minutes:
// ceil(dist / (speed * slot)), never below 1 (staying costs one slot).
int geometric_movement_time(double dist_km, double speed_km_per_min, double slot_minutes);

// Linear-in-distance cost, rounded up to the money grid so that triangle
// inequalities of the underlying metric survive quantization.
Money geometric_movement_cost(double dist_km, Money cost_coefficient);

// One L x L table of movement times (slots) and costs, as used per user or
// per transport-mode class.
struct MovementTable {
  int num_locations = 0;
  std::vector<int> time;     // row-major, slots
  std::vector<Money> cost;   // row-major

  int slots(int from, int to) const { return time[(from - 1) * num_locations + (to - 1)]; }
  Money money(int from, int to) const { return cost[(from - 1) * num_locations + (to - 1)]; }
  friend bool operator==(const MovementTable&, const MovementTable&) = default;
};

// Movement-table document: rows (mode, from_location, to_location, minutes, cost).
struct MovementDoc {
  struct Row {
    std::string mode;
    int from = 0;
    int to = 0;
    double minutes = 0.0;
    Money cost;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;
  friend bool operator==(const MovementDoc&, const MovementDoc&) = default;
};

MovementDoc parse_movement_doc(std::istream& in);
void write_movement_doc(std::ostream& out, const MovementDoc& doc);

// Tables keyed by mode class. Minutes convert to slots by ceiling division by
// slot_minutes, clamped to >= 1 off-diagonal; diagonals are forced to the
// staying convention (1 slot, zero cost). A missing off-diagonal pair is an
// error naming the (mode, from, to) triple.
std::map<std::string, MovementTable> ingest_movement_table(const MovementDoc& doc,
                                                           int num_locations,
                                                           double slot_minutes);

// Inverse of ingestion up to the staying convention: minutes = slots * slot_minutes.
MovementDoc emit_movement_doc(const std::map<std::string, MovementTable>& tables,
                              double slot_minutes);

}  // namespace tsg

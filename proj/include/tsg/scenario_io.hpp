#pragma once

#include <iosfwd>
#include <string>

#include "tsg/core_model.hpp"

namespace tsg {

// Versioned scenario document (JSON) with sections locations, tasks, users,
// movement_time, movement_cost, horizon, slot_length. Movement sections hold
// either the string "geometric" or per-user L x L matrices; money fields are
// fixed 4-decimal strings.
void write_scenario(std::ostream& out, const Scenario& s);
std::string scenario_to_string(const Scenario& s);

Scenario read_scenario(std::istream& in, bool strict_triangle = false);
Scenario read_scenario_file(const std::string& path, bool strict_triangle = false);
void write_scenario_file(const std::string& path, const Scenario& s);

}  // namespace tsg

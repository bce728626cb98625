#pragma once

// JSON shapes for the command-line tool. Rationals are always "n/d" strings.

#include <json.hpp>

#include "billiard/covering.hpp"
#include "billiard/planner.hpp"
#include "billiard/trajectory.hpp"

namespace billiard {

nlohmann::json to_json(const Rational& r);
/// Number when it fits in 64 bits, decimal string otherwise.
nlohmann::json to_json(const BigInt& n);
nlohmann::json to_json(const Point& pt);
nlohmann::json to_json(const TrajectorySpec& spec);
nlohmann::json to_json(const TrajectorySpec& spec, const Classification& c);
nlohmann::json to_json(const Orbit& orbit);
nlohmann::json to_json(const CoverReport& report);
nlohmann::json to_json(const Surd& length);
nlohmann::json to_json(const Plan& plan);

}  // namespace billiard

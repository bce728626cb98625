#include "billiard/serialize.hpp"

#include <limits>

namespace billiard {

using nlohmann::json;

json to_json(const Rational& r) { return r.to_string(); }

json to_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return n.convert_to<std::int64_t>();
  }
  return n.str();
}

json to_json(const Point& pt) { return json::array({to_json(pt.x), to_json(pt.y)}); }

json to_json(const TrajectorySpec& spec) {
  json j{{"kind", spec.kind_name()}, {"a", to_json(spec.a())}};
  if (spec.is_sloped()) {
    j["p"] = spec.sloped().p();
    j["q"] = spec.sloped().q();
  }
  return j;
}

json to_json(const TrajectorySpec& spec, const Classification& c) {
  return {{"spec", to_json(spec)},
          {"kind", c.periodic() ? "periodic" : "singular"},
          {"period", c.period ? json(*c.period) : json(nullptr)}};
}

json to_json(const Orbit& orbit) {
  auto list = [](const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& r : v) arr.push_back(to_json(r));
    return arr;
  };
  json segments = json::array();
  for (const auto& s : orbit.segments) segments.push_back(json::array({to_json(s.start()), to_json(s.end())}));
  json cells = json::array();
  for (const auto& [idx, vertices] : cell_decomposition(orbit)) {
    json vs = json::array();
    for (const auto& v : vertices) vs.push_back(to_json(v));
    cells.push_back({{"i", idx.i}, {"j", idx.j}, {"vertices", vs}});
  }
  return {{"spec", to_json(orbit.spec)},
          {"period", orbit.period()},
          {"bounce_points",
           {{"bottom", list(orbit.bounce_points.bottom)},
            {"top", list(orbit.bounce_points.top)},
            {"left", list(orbit.bounce_points.left)},
            {"right", list(orbit.bounce_points.right)}}},
          {"segments", segments},
          {"cells", cells}};
}

json to_json(const CoverReport& report) {
  return {{"exact", {{"m", to_json(report.exact.m())}, {"s", to_json(report.exact.s())}}},
          {"float", report.float_value},
          {"oracle", report.oracle_estimate ? json(*report.oracle_estimate) : json(nullptr)},
          {"grid_n", report.grid_n ? json(*report.grid_n) : json(nullptr)}};
}

json to_json(const Surd& length) {
  return {{"coeff", length.coeff.is_integer() ? to_json(length.coeff.numerator()) : to_json(length.coeff)},
          {"radicand", to_json(length.radicand)},
          {"float", length.to_double()}};
}

json to_json(const Plan& plan) {
  json reps = json::array();
  for (const auto& [p, q] : plan.representations) reps.push_back(json::array({p, q}));
  json starts = json::array();
  for (const auto& a : plan.all_min_starts) starts.push_back(to_json(a));
  json alt = nullptr;
  if (plan.period2_alternative) {
    alt = {{"spec", to_json(plan.period2_alternative->spec)}, {"length", to_json(plan.period2_alternative->length)}};
  }
  return {{"r", to_json(plan.r)},
          {"threshold", to_json(plan.threshold)},
          {"M", plan.m},
          {"reps", reps},
          {"canonical", to_json(plan.canonical_spec)},
          {"starts", starts},
          {"length", to_json(plan.path_length)},
          {"period2_alternative", alt}};
}

}  // namespace billiard

// Acceptance checks. Prints one PASS/FAIL line per criterion; exits nonzero if any fail.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "billiard/covering.hpp"
#include "billiard/planner.hpp"
#include "billiard/render.hpp"
#include "billiard/trajectory.hpp"
#include "oracles.hpp"

using namespace billiard;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  int checks = 0;

  void expect(bool cond, const std::string& what) {
    ++checks;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

Rational q(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

std::string str(const TrajectorySpec& spec) { return spec.describe(); }

// Sorted coordinates must sit one per subinterval of width 1/n, and neighbours must
// be mirror images across the grid line between them.
void check_side(Outcome& out, const std::vector<Rational>& h, std::int64_t n, const std::string& label) {
  out.expect(static_cast<std::int64_t>(h.size()) == n, label + ": wrong count");
  if (static_cast<std::int64_t>(h.size()) != n) return;
  for (std::int64_t i = 1; i <= n; ++i) {
    const Rational& v = h[i - 1];
    out.expect(q(i - 1, n) < v && v < q(i, n), label + ": not one per subinterval");
    if (i < n) {
      out.expect(v < h[i], label + ": not distinct");
      out.expect((v + h[i]) / Rational(2) == q(i, n), label + ": midpoint identity fails");
    }
  }
}

Outcome period_formula() {
  Outcome out;
  for (std::int64_t p = 1; p <= 12; ++p) {
    for (std::int64_t qq = 1; qq <= 12; ++qq) {
      if (std::gcd(p, qq) != 1) continue;
      for (std::int64_t t = 1; t <= 100; ++t) {
        const Sloped spec(q(t, 101), p, qq);
        const Orbit orbit = simulate_orbit(spec);
        const std::string name = str(spec);
        out.expect(orbit.period() == 2 * (p + qq), name + ": period " + std::to_string(orbit.period()));
        const auto& first = orbit.segments.front();
        const auto& last = orbit.segments.back();
        out.expect(last.end() == first.start(), name + ": position does not recur");
        // Arrival heads along (q, -p), so the bottom bounce restores (q, p).
        const Point d = last.delta();
        out.expect(d.x.sign() > 0 && d.y.sign() < 0 && -d.y * Rational(qq) == d.x * Rational(p),
                   name + ": direction does not recur");
        for (std::size_t k = 0; k + 1 < orbit.segments.size(); ++k) {
          out.expect(orbit.segments[k].end() == orbit.segments[k + 1].start(), name + ": path is broken");
          const Point dk = orbit.segments[k + 1].delta(), d0 = first.delta();
          const bool same_state = orbit.segments[k + 1].start() == first.start() && dk.x.sign() == d0.x.sign() &&
                                  dk.y * d0.x == dk.x * d0.y;
          out.expect(!same_state, name + ": state recurs early");
        }
      }
    }
  }
  return out;
}

Outcome bounce_structure() {
  Outcome out;
  std::mt19937_64 rng(20261016);
  std::uniform_int_distribution<std::int64_t> pick(1, 50), den_pick(2, 997);
  int done = 0;
  while (done < 500) {
    const std::int64_t p = pick(rng), qq = pick(rng);
    if (std::gcd(p, qq) != 1) continue;
    const std::int64_t den = den_pick(rng);
    const std::int64_t num = std::uniform_int_distribution<std::int64_t>(1, den - 1)(rng);
    const Sloped spec(q(num, den), p, qq);
    if (!classify(spec).periodic()) continue;
    ++done;
    const std::string name = str(spec);
    const Orbit orbit = simulate_orbit(spec);
    const BouncePoints& b = orbit.bounce_points;
    check_side(out, b.bottom, p, name + " bottom");
    check_side(out, b.top, p, name + " top");
    check_side(out, b.left, qq, name + " left");
    check_side(out, b.right, qq, name + " right");
    out.expect(b == bounce_points_unfolded(spec), name + ": unfolding disagrees with simulation");
    out.expect(b.bottom.front() == frac_part(spec.a() * Rational(p)) / Rational(p) ||
                   b.bottom.front() == (Rational(1) - frac_part(spec.a() * Rational(p))) / Rational(p),
               name + ": first subinterval offset");
  }
  return out;
}

Outcome symmetry_equivalence() {
  Outcome out;
  for (std::int64_t p = 1; p <= 10; ++p) {
    for (std::int64_t qq = 1; qq <= 10; ++qq) {
      if (std::gcd(p, qq) != 1) continue;
      for (std::int64_t t = 1; t < 97; ++t) {
        const Sloped spec(q(t, 97), p, qq);
        const Orbit sim = simulate_orbit(spec);
        const Orbit sym = build_orbit_by_symmetry(spec);
        out.expect(canonical_segment_set(sim.segments) == canonical_segment_set(sym.segments),
                   str(spec) + ": segment sets differ");
      }
    }
  }
  return out;
}

Outcome covering_formula() {
  Outcome out;
  const std::int64_t n = 2000;
  const double slack = grid_oracle_bound(n) + 1e-12;
  std::vector<TrajectorySpec> specs{Sloped(Rational::parse("0.02"), 8, 5), Sloped(q(1, 16), 8, 5),
                                    Vertical(q(1, 3)), Horizontal(q(5, 7))};
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<std::int64_t> pick(1, 9), den_pick(2, 60);
  while (specs.size() < 50) {
    const std::int64_t p = pick(rng), qq = pick(rng), den = den_pick(rng);
    if (std::gcd(p, qq) != 1) continue;
    const Sloped spec(q(std::uniform_int_distribution<std::int64_t>(1, den - 1)(rng), den), p, qq);
    if (classify(spec).periodic()) specs.emplace_back(spec);
  }
  for (const auto& spec : specs) {
    const double formula = covering_radius(spec).to_double();
    const double oracle = grid_oracle_radius(simulate_orbit(spec), n);
    out.expect(oracle <= formula && formula <= oracle + slack,
               str(spec) + ": oracle " + std::to_string(oracle) + " vs formula " + std::to_string(formula));
  }
  const ExactRadius optimal = covering_radius(Sloped(q(1, 16), 8, 5));
  out.expect(optimal == ExactRadius(q(1, 2), BigInt(89)), "gamma(1/16, 8/5) is not 1/(2 sqrt 89)");
  out.expect(std::abs(optimal.to_double() - 0.0530) < 5e-5, "gamma(1/16, 8/5) value is not 0.0530");
  return out;
}

Outcome class_minimum() {
  Outcome out;
  for (std::int64_t p = 1; p <= 10; ++p) {
    for (std::int64_t qq = 1; qq <= 10; ++qq) {
      if (std::gcd(p, qq) != 1) continue;
      std::optional<ExactRadius> best;
      std::vector<Rational> argmin;
      for (std::int64_t t = 1; t < 4 * p; ++t) {
        const Sloped spec(q(t, 4 * p), p, qq);
        if (!classify(spec).periodic()) continue;
        const ExactRadius r = covering_radius(spec);
        if (!best || r < *best) {
          best = r;
          argmin = {spec.a()};
        } else if (r == *best) {
          argmin.push_back(spec.a());
        }
      }
      std::vector<Rational> midpoints;
      for (std::int64_t k = 1; k <= p; ++k) midpoints.push_back(q(2 * k - 1, 2 * p));
      const std::string name = std::to_string(p) + "/" + std::to_string(qq);
      out.expect(argmin == midpoints, name + ": minimizers are not the subinterval midpoints");
      out.expect(best && *best == ExactRadius(q(1, 2), BigInt(p * p + qq * qq)), name + ": minimum value");
      out.expect(best && *best == class_min_radius(p, qq).radius, name + ": class_min_radius disagrees");
    }
  }
  return out;
}

Outcome planner() {
  Outcome out;
  for (std::int64_t k = 2; k <= 60; ++k) {
    const Plan plan = plan_shortest_cover(q(1, k));
    const std::int64_t expected = oracle::shortest_cover_m_for_inverse_radius(k);
    const std::string name = "r = 1/" + std::to_string(k);
    out.expect(static_cast<std::int64_t>(plan.m) == expected,
               name + ": M = " + std::to_string(plan.m) + ", brute force " + std::to_string(expected));
    out.expect(plan.representations == oracle::representations(expected), name + ": representations differ");
    out.expect(covers(plan.canonical_spec, plan.r), name + ": canonical orbit does not cover");
  }
  const Plan tenth = plan_shortest_cover(q(1, 10));
  out.expect(tenth.threshold == Rational(25), "r = 1/10: threshold is not 25");
  out.expect(!oracle::representations(25).empty(), "25 should be 3^2 + 4^2");
  out.expect(tenth.m == 26, "r = 1/10: M is not 26");
  out.expect(tenth.representations == std::vector<SquarePair>{{1, 5}}, "r = 1/10: representation is not (1, 5)");
  out.expect(tenth.path_length == Surd{Rational(2), BigInt(26)}, "r = 1/10: length is not 2 sqrt 26");
  out.expect(!covers(Sloped(q(1, 8), 4, 3), q(1, 10)), "gamma(1/8, 4/3) should fall exactly short of r = 1/10");
  return out;
}

Outcome two_squares() {
  Outcome out;
  const std::uint64_t limit = 100000;
  const auto table = oracle::proper_two_square_table(limit);
  for (std::uint64_t m = 1; m <= limit; ++m) {
    const bool rep = is_properly_representable(m);
    out.expect(rep == table[m], "M = " + std::to_string(m) + ": criterion disagrees with exhaustive search");
    if (!rep || m == 1) continue;  // 1 = 0^2 + 1^2 has no positive representation
    const auto [x, y] = cornacchia(m);
    out.expect(static_cast<std::uint64_t>(x * x + y * y) == m && std::gcd(x, y) == 1,
               "M = " + std::to_string(m) + ": cornacchia returned a bad pair");
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome figure() {
  Outcome out;
  const Orbit orbit = simulate_orbit(Sloped(Rational::parse("0.02"), 8, 5));
  const std::string svg = render_orbit(orbit);
  out.expect(svg == render_orbit(simulate_orbit(Sloped(Rational::parse("0.02"), 8, 5))), "render is not deterministic");
  out.expect(svg == read_file(std::string(GOLDEN_DIR) + "/gamma_0.02_8_5.svg"), "golden bytes differ");

  const auto orbit_at = svg.find("<g id=\"orbit\"");
  const auto points_at = svg.find("points=\"", orbit_at);
  const auto points_end = svg.find('"', points_at + 8);
  std::istringstream points(svg.substr(points_at + 8, points_end - points_at - 8));
  std::vector<std::string> pts{std::istream_iterator<std::string>(points), {}};
  out.expect(pts.size() == 27 && pts.front() == pts.back(), "orbit polyline is not 26 closed segments");

  const auto grid_at = svg.find("<g id=\"grid\"");
  const std::string grid = svg.substr(grid_at, svg.find("</g>", grid_at) - grid_at);
  std::set<std::string> xs, ys;
  for (auto at = grid.find("<line"); at != std::string::npos; at = grid.find("<line", at + 1)) {
    auto attr = [&](const std::string& name) {
      const auto s = grid.find(name + "=\"", at) + name.size() + 2;
      return grid.substr(s, grid.find('"', s) - s);
    };
    if (attr("x1") == attr("x2")) xs.insert(attr("x1"));
    if (attr("y1") == attr("y2")) ys.insert(attr("y1"));
  }
  out.expect(xs.size() == 7 && ys.size() == 4, "grid is not 8 x 5");
  return out;
}

Outcome parallelogram_radius() {
  Outcome out;
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<std::int64_t> side(1, 30), frac(0, 1000);
  for (int it = 0; it < 200; ++it) {
    const std::int64_t w = side(rng), h = side(rng);
    // Every tenth instance is a rectangle with the parallelogram pinned to a corner.
    const Rational u = it % 10 == 0 ? Rational(0) : Rational(w) * q(frac(rng), 1000);
    const ExactRadius r =
        parallelogram_cover_radius({u, Rational(w) - u, ExactRadius(Rational(h), BigInt(w * w + h * h))});
    const auto sampled = oracle::sampled_parallelogram_radius(double(w), double(h), u.to_double(), 100);
    const double exact = r.to_double();
    out.expect(sampled.radius <= exact + 1e-12 && exact <= sampled.radius + sampled.bound + 1e-12,
               std::to_string(w) + "x" + std::to_string(h) + ": sampled " + std::to_string(sampled.radius) +
                   " vs " + std::to_string(exact));
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"period is 2(p+q) with exact recurrence", period_formula},
      {"bounce points on all four sides", bounce_structure},
      {"symmetry construction equals simulation", symmetry_equivalence},
      {"covering radius formula within the grid sandwich", covering_formula},
      {"class minimum at subinterval midpoints", class_minimum},
      {"shortest-cover planner", planner},
      {"two-squares criterion and cornacchia", two_squares},
      {"figure reproduction", figure},
      {"parallelogram covering radius vs dense sampling", parallelogram_radius},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out.ok = false;
      out.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (out.ok ? "PASS" : "FAIL") << "  " << i + 1 << ". " << criteria[i].first << " (" << out.checks
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s)";
    if (!out.ok) std::cout << ": " << out.detail;
    std::cout << '\n';
    if (!out.ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}

#include "billiard/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "billiard/covering.hpp"
#include "billiard/error.hpp"
#include "billiard/planner.hpp"
#include "billiard/render.hpp"
#include "billiard/serialize.hpp"
#include "billiard/trajectory.hpp"

namespace billiard::cli {

namespace {

struct TrajectoryArgs {
  std::string a;
  std::optional<std::int64_t> p;
  std::optional<std::int64_t> q;
  std::string kind = "sloped";
};

void add_trajectory_options(CLI::App* cmd, TrajectoryArgs& args) {
  cmd->add_option("--a", args.a, "starting point a in (0,1), as n/d or a decimal")->required();
  cmd->add_option("--p", args.p, "bottom-edge bounces per period (slope numerator)");
  cmd->add_option("--q", args.q, "left-edge bounces per period (slope denominator)");
  cmd->add_option("--kind", args.kind, "sloped, vertical or horizontal")
      ->check(CLI::IsMember({"sloped", "vertical", "horizontal"}));
}

TrajectorySpec make_spec(const TrajectoryArgs& args) {
  const Rational a = Rational::parse(args.a);
  if (args.kind == "vertical") return Vertical(a);
  if (args.kind == "horizontal") return Horizontal(a);
  if (!args.p || !args.q) throw InvalidSpec("--p and --q are required for sloped trajectories");
  return Sloped(a, *args.p, *args.q);
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string format_surd(const Surd& s) {
  const std::string coeff = s.coeff.is_integer() ? s.coeff.numerator().str() : "(" + s.coeff.to_string() + ")";
  return coeff + "·√" + s.radicand.str();
}

std::string join(const std::vector<Rational>& values) {
  std::string s;
  for (const auto& v : values) s += (s.empty() ? "" : " ") + v.to_string();
  return s;
}

void print_orbit(std::ostream& out, const Orbit& orbit, const std::string& method) {
  out << orbit.spec.describe() << ": period " << orbit.period() << " (" << method << ")\n";
  out << "bottom: " << join(orbit.bounce_points.bottom) << "\n";
  out << "top: " << join(orbit.bounce_points.top) << "\n";
  out << "left: " << join(orbit.bounce_points.left) << "\n";
  out << "right: " << join(orbit.bounce_points.right) << "\n";
  out << "segments:\n";
  for (const auto& s : orbit.segments) out << "  " << s << "\n";
}

void print_plan(std::ostream& out, const Plan& plan) {
  out << "r = " << plan.r << ", threshold 1/(4r^2) = " << plan.threshold << "\n";
  out << "M = " << plan.m << "\n";
  out << "representations (p, q):";
  for (const auto& [p, q] : plan.representations) out << " (" << p << ", " << q << ")";
  out << "\n";
  out << "canonical: " << plan.canonical_spec.describe() << "\n";
  out << "optimal starts a: " << join(plan.all_min_starts) << "\n";
  out << "length = " << format_surd(plan.path_length) << " ≈ "
      << fixed6(plan.path_length.to_double()) << "\n";
  const ExactRadius rcov = covering_radius(plan.canonical_spec);
  out << "rcov = " << rcov.to_string() << " ≈ " << fixed6(rcov.to_double()) << "\n";
  if (plan.period2_alternative) {
    out << "period-2 alternative: " << plan.period2_alternative->spec.describe() << ", length "
        << format_surd(plan.period2_alternative->length) << " (also covers; not compared)\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Periodic billiard orbits in the unit square: covering radii and shortest covering paths"};
  app.name("billiard");
  app.require_subcommand(1);

  std::function<void()> action;
  bool json_out = false;

  TrajectoryArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "singular or periodic, with the period");
  add_trajectory_options(classify_cmd, classify_args);
  classify_cmd->add_flag("--json", json_out);
  classify_cmd->callback([&] {
    action = [&] {
      const TrajectorySpec spec = make_spec(classify_args);
      const Classification c = classify(spec);
      if (json_out) {
        out << to_json(spec, c).dump(2) << "\n";
      } else if (c.periodic()) {
        out << "periodic, period " << *c.period << "\n";
      } else {
        out << "singular (hits a corner)\n";
      }
    };
  });

  TrajectoryArgs orbit_args;
  std::string method = "simulate";
  auto* orbit_cmd = app.add_subcommand("orbit", "bounce points, segments and cells of an orbit");
  add_trajectory_options(orbit_cmd, orbit_args);
  orbit_cmd->add_option("--method", method, "simulate or symmetry")->check(CLI::IsMember({"simulate", "symmetry"}));
  orbit_cmd->add_flag("--json", json_out);
  orbit_cmd->callback([&] {
    action = [&] {
      const TrajectorySpec spec = make_spec(orbit_args);
      const Orbit orbit = method == "symmetry" ? build_orbit_by_symmetry(spec.sloped()) : simulate_orbit(spec);
      if (json_out) {
        out << to_json(orbit).dump(2) << "\n";
      } else {
        print_orbit(out, orbit, method);
      }
    };
  });

  TrajectoryArgs rcov_args;
  std::optional<std::int64_t> rcov_grid;
  auto* rcov_cmd = app.add_subcommand("rcov", "optimal covering radius in closed form");
  add_trajectory_options(rcov_cmd, rcov_args);
  rcov_cmd->add_option("--grid", rcov_grid, "also run the grid oracle with this n")->check(CLI::Range(2, 100000));
  rcov_cmd->add_flag("--json", json_out);
  rcov_cmd->callback([&] {
    action = [&] {
      const CoverReport report = make_cover_report(make_spec(rcov_args), rcov_grid);
      if (json_out) {
        out << to_json(report).dump(2) << "\n";
        return;
      }
      out << "rcov = " << report.exact.to_string() << " ≈ " << fixed6(report.float_value) << "\n";
      if (report.oracle_estimate) {
        out << "grid oracle (n = " << *report.grid_n << ") = " << fixed6(*report.oracle_estimate) << "\n";
      }
    };
  });

  std::string radius;
  auto* plan_cmd = app.add_subcommand("plan", "shortest periodic path covering the square for a blade radius");
  plan_cmd->add_option("--radius,-r", radius, "blade radius r > 0, as n/d or a decimal")->required();
  plan_cmd->add_flag("--json", json_out);
  plan_cmd->callback([&] {
    action = [&] {
      const Plan plan = plan_shortest_cover(Rational::parse(radius));
      if (json_out) {
        out << to_json(plan).dump(2) << "\n";
      } else {
        print_plan(out, plan);
      }
    };
  });

  TrajectoryArgs verify_args;
  std::int64_t verify_grid = 1000;
  int verify_status = 0;
  auto* verify_cmd = app.add_subcommand("verify", "check the closed form against the grid oracle");
  add_trajectory_options(verify_cmd, verify_args);
  verify_cmd->add_option("--grid", verify_grid, "grid resolution n")->check(CLI::Range(2, 100000));
  verify_cmd->add_flag("--json", json_out);
  verify_cmd->callback([&] {
    action = [&] {
      const CoverReport report = make_cover_report(make_spec(verify_args), verify_grid);
      const bool holds = report.sandwich_holds();
      verify_status = holds ? 0 : 1;
      if (json_out) {
        auto j = to_json(report);
        j["holds"] = holds;
        out << j.dump(2) << "\n";
        return;
      }
      out << "formula: rcov = " << report.exact.to_string() << " ≈ " << fixed6(report.float_value) << "\n";
      out << "oracle (n = " << verify_grid << "): " << fixed6(*report.oracle_estimate) << "\n";
      out << "bound: oracle <= formula <= oracle + " << fixed6(grid_oracle_bound(verify_grid)) << " + 1e-12\n";
      out << (holds ? "sandwich holds" : "sandwich FAILS") << "\n";
    };
  });

  TrajectoryArgs render_args;
  RenderOptions render_opts;
  std::string render_out;
  bool no_grid = false;
  std::optional<double> neighborhood;
  auto* render_cmd = app.add_subcommand("render", "write an SVG figure of the orbit");
  add_trajectory_options(render_cmd, render_args);
  render_cmd->add_option("--out,-o", render_out, "output path (stdout if omitted)");
  render_cmd->add_option("--width", render_opts.width_px, "image width in pixels");
  render_cmd->add_option("--margin", render_opts.margin_px, "margin in pixels");
  render_cmd->add_option("--stroke", render_opts.stroke_width, "orbit stroke width in pixels");
  render_cmd->add_option("--neighborhood", neighborhood, "shade the r-neighborhood for this r");
  render_cmd->add_flag("--no-grid", no_grid, "omit the subrectangle grid");
  render_cmd->add_flag("--cells", render_opts.show_cells, "fill the cell parallelograms");
  render_cmd->callback([&] {
    action = [&] {
      render_opts.show_grid = !no_grid;
      render_opts.neighborhood_r = neighborhood;
      render_opts.validate();
      const std::string svg = render_orbit(simulate_orbit(make_spec(render_args)), render_opts);
      if (render_out.empty()) {
        out << svg;
        return;
      }
      std::ofstream file(render_out, std::ios::binary);
      if (!file) throw InvalidOptions("cannot open output file " + render_out);
      file << svg;
      if (!file.flush()) throw std::runtime_error("failed writing " + render_out);
      out << "wrote " << render_out << "\n";
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (action) action();
    return verify_status;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace billiard::cli

#include "billiard/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "billiard/error.hpp"

namespace billiard {

namespace {

class Viewport {
 public:
  explicit Viewport(const RenderOptions& opts)
      : margin_(opts.margin_px), side_(static_cast<double>(opts.width_px - 2 * opts.margin_px)) {}

  double x(double ux) const { return margin_ + ux * side_; }
  double y(double uy) const { return margin_ + (1.0 - uy) * side_; }
  double length(double u) const { return u * side_; }

  std::string point(const Point& pt) const {
    return format_coordinate(x(pt.x.to_double())) + "," + format_coordinate(y(pt.y.to_double()));
  }

 private:
  double margin_;
  double side_;
};

std::string polyline_points(const Orbit& orbit, const Viewport& view) {
  std::string out = view.point(orbit.segments.front().start());
  // A period-2 chord is traversed twice; draw it once.
  const std::size_t count = orbit.spec.is_sloped() ? orbit.segments.size() : 1;
  for (std::size_t k = 0; k < count; ++k) out += " " + view.point(orbit.segments[k].end());
  return out;
}

}  // namespace

void RenderOptions::validate() const {
  if (width_px < 64) throw InvalidOptions("width_px must be at least 64");
  if (margin_px < 0) throw InvalidOptions("margin_px must be nonnegative");
  if (width_px - 2 * margin_px <= 0) throw InvalidOptions("margin leaves no room for the square");
  if (!(stroke_width > 0.0) || !std::isfinite(stroke_width)) throw InvalidOptions("stroke_width must be positive");
  if (neighborhood_r && (!(*neighborhood_r > 0.0) || !std::isfinite(*neighborhood_r))) {
    throw InvalidOptions("neighborhood_r must be positive");
  }
}

std::string format_coordinate(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  std::string s(buf);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::string render_orbit(const Orbit& orbit, const RenderOptions& opts) {
  opts.validate();
  if (orbit.segments.empty()) throw InvalidOptions("cannot render an empty orbit");
  const Viewport view(opts);
  const std::string w = std::to_string(opts.width_px);
  const std::string points = polyline_points(orbit, view);

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << w
      << "\" viewBox=\"0 0 " << w << " " << w << "\">\n";
  svg << "  <title>" << orbit.spec.describe() << ", period " << orbit.period() << "</title>\n";
  svg << "  <rect x=\"" << format_coordinate(view.x(0)) << "\" y=\"" << format_coordinate(view.y(1))
      << "\" width=\"" << format_coordinate(view.length(1)) << "\" height=\"" << format_coordinate(view.length(1))
      << "\" fill=\"white\" stroke=\"none\"/>\n";

  if (opts.neighborhood_r) {
    svg << "  <g id=\"neighborhood\">\n";
    svg << "    <polyline points=\"" << points << "\" fill=\"none\" stroke=\"#9ecae1\" stroke-opacity=\"0.6\" "
        << "stroke-width=\"" << format_coordinate(view.length(2.0 * *opts.neighborhood_r))
        << "\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
    svg << "  </g>\n";
  }

  if (opts.show_cells && !orbit.cells.empty()) {
    svg << "  <g id=\"cells\" fill=\"#fdd0a2\" fill-opacity=\"0.5\" stroke=\"none\">\n";
    for (const auto& [idx, vertices] : cell_decomposition(orbit)) {
      svg << "    <polygon points=\"" << view.point(vertices[0]) << " " << view.point(vertices[1]) << " "
          << view.point(vertices[2]) << " " << view.point(vertices[3]) << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  if (opts.show_grid && orbit.spec.is_sloped()) {
    const auto& s = orbit.spec.sloped();
    svg << "  <g id=\"grid\" stroke=\"#969696\" stroke-width=\"1\" stroke-dasharray=\"4 3\">\n";
    for (std::int64_t i = 1; i < s.p(); ++i) {
      const std::string x = format_coordinate(view.x(static_cast<double>(i) / static_cast<double>(s.p())));
      svg << "    <line x1=\"" << x << "\" y1=\"" << format_coordinate(view.y(0)) << "\" x2=\"" << x << "\" y2=\""
          << format_coordinate(view.y(1)) << "\"/>\n";
    }
    for (std::int64_t j = 1; j < s.q(); ++j) {
      const std::string y = format_coordinate(view.y(static_cast<double>(j) / static_cast<double>(s.q())));
      svg << "    <line x1=\"" << format_coordinate(view.x(0)) << "\" y1=\"" << y << "\" x2=\""
          << format_coordinate(view.x(1)) << "\" y2=\"" << y << "\"/>\n";
    }
    svg << "  </g>\n";
  }

  svg << "  <g id=\"orbit\">\n";
  svg << "    <polyline points=\"" << points << "\" fill=\"none\" stroke=\"#08519c\" stroke-width=\""
      << format_coordinate(opts.stroke_width) << "\" stroke-linejoin=\"round\"/>\n";
  svg << "  </g>\n";
  svg << "  <rect x=\"" << format_coordinate(view.x(0)) << "\" y=\"" << format_coordinate(view.y(1))
      << "\" width=\"" << format_coordinate(view.length(1)) << "\" height=\"" << format_coordinate(view.length(1))
      << "\" fill=\"none\" stroke=\"black\" stroke-width=\"2\"/>\n";
  svg << "  <circle cx=\"" << format_coordinate(view.x(orbit.segments.front().start().x.to_double()))
      << "\" cy=\"" << format_coordinate(view.y(orbit.segments.front().start().y.to_double()))
      << "\" r=\"4\" fill=\"#cb181d\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace billiard

#include "billiard/trajectory.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace billiard {

namespace {

const Rational kZero{0};
const Rational kOne{1};

void require_open_unit(const Rational& a) {
  if (a <= kZero || a >= kOne) throw InvalidSpec("starting point must satisfy 0 < a < 1, got a = " + a.to_string());
}

Rational ratio(std::int64_t n, std::int64_t d) { return Rational(BigInt(n), BigInt(d)); }

Point add_scaled(const Point& pt, const Rational& t, std::int64_t dx, std::int64_t dy) {
  return {pt.x + t * Rational(dx), pt.y + t * Rational(dy)};
}

enum class Side { Bottom, Top, Left, Right };

std::optional<Side> side_of(const Point& pt) {
  if (pt.y == kZero) return Side::Bottom;
  if (pt.y == kOne) return Side::Top;
  if (pt.x == kZero) return Side::Left;
  if (pt.x == kOne) return Side::Right;
  return std::nullopt;
}

void record_bounce(BouncePoints& bp, const Point& pt) {
  const auto side = side_of(pt);
  if (!side) throw std::logic_error("bounce point is not on the boundary");
  switch (*side) {
    case Side::Bottom: bp.bottom.push_back(pt.x); break;
    case Side::Top: bp.top.push_back(pt.x); break;
    case Side::Left: bp.left.push_back(pt.y); break;
    case Side::Right: bp.right.push_back(pt.y); break;
  }
}

void sort_bounces(BouncePoints& bp) {
  std::sort(bp.bottom.begin(), bp.bottom.end());
  std::sort(bp.top.begin(), bp.top.end());
  std::sort(bp.left.begin(), bp.left.end());
  std::sort(bp.right.begin(), bp.right.end());
}

BouncePoints bounces_of(const std::vector<Segment>& segments) {
  BouncePoints bp;
  for (const auto& seg : segments) record_bounce(bp, seg.end());
  sort_bounces(bp);
  return bp;
}

// Splits each segment at the grid lines x = i/p, y = j/q and assembles the
// four pieces falling in every cell into bottom->right->top->left order.
std::map<CellIndex, CellPieces> clip_to_cells(const std::vector<Segment>& segments, std::int64_t p,
                                              std::int64_t q) {
  std::map<CellIndex, std::vector<Segment>> raw;
  const Rational rp(p), rq(q);
  for (const auto& seg : segments) {
    const Point d = seg.delta();
    const Point& s0 = seg.start();
    std::vector<Point> cuts{seg.start(), seg.end()};
    if (d.x.sign() != 0) {
      const Rational slope = d.y / d.x;
      const Rational lo = std::min(s0.x, seg.end().x) * rp, hi = std::max(s0.x, seg.end().x) * rp;
      for (BigInt k = lo.floor() + 1; Rational(k) < hi; ++k) {
        const Rational x = Rational(k, BigInt(p));
        cuts.push_back({x, s0.y + (x - s0.x) * slope});
      }
    }
    if (d.y.sign() != 0) {
      const Rational inv_slope = d.x / d.y;
      const Rational lo = std::min(s0.y, seg.end().y) * rq, hi = std::max(s0.y, seg.end().y) * rq;
      for (BigInt k = lo.floor() + 1; Rational(k) < hi; ++k) {
        const Rational y = Rational(k, BigInt(q));
        cuts.push_back({s0.x + (y - s0.y) * inv_slope, y});
      }
    }
    // Points on a segment are ordered by distance from the start along the dominant axis.
    const bool by_x = d.x.sign() != 0;
    const bool ascending = by_x ? d.x.sign() > 0 : d.y.sign() > 0;
    std::sort(cuts.begin(), cuts.end(), [&](const Point& u, const Point& v) {
      const Rational& cu = by_x ? u.x : u.y;
      const Rational& cv = by_x ? v.x : v.y;
      return ascending ? cu < cv : cv < cu;
    });
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const Point& a = cuts[k];
      const Point& b = cuts[k + 1];
      const CellIndex cell{static_cast<std::int64_t>((std::min(a.x, b.x) * rp).floor()) + 1,
                           static_cast<std::int64_t>((std::min(a.y, b.y) * rq).floor()) + 1};
      raw[cell].emplace_back(a, b);
    }
  }

  std::map<CellIndex, CellPieces> cells;
  for (auto& [idx, pieces] : raw) {
    if (pieces.size() != 4) {
      std::ostringstream os;
      os << "cell (" << idx.i << ", " << idx.j << ") holds " << pieces.size() << " orbit pieces, expected 4";
      throw std::logic_error(os.str());
    }
    const Rational x_lo = ratio(idx.i - 1, p), x_hi = ratio(idx.i, p);
    const Rational y_lo = ratio(idx.j - 1, q), y_hi = ratio(idx.j, q);
    std::array<std::optional<Point>, 4> corners;  // bottom, right, top, left
    auto place = [&](const Point& v) {
      int slot = -1;
      if (v.y == y_lo) slot = 0;
      else if (v.x == x_hi) slot = 1;
      else if (v.y == y_hi) slot = 2;
      else if (v.x == x_lo) slot = 3;
      if (slot < 0) throw std::logic_error("cell piece endpoint is not on the cell boundary");
      if (corners[slot] && *corners[slot] != v) throw std::logic_error("two distinct orbit vertices on one cell side");
      corners[slot] = v;
    };
    for (const auto& piece : pieces) {
      place(piece.start());
      place(piece.end());
    }
    for (const auto& c : corners) {
      if (!c) throw std::logic_error("cell side without an orbit vertex");
    }
    CellPieces ordered{Segment(*corners[0], *corners[1]), Segment(*corners[1], *corners[2]),
                       Segment(*corners[2], *corners[3]), Segment(*corners[3], *corners[0])};
    for (const auto& side : ordered) {
      const bool found = std::any_of(pieces.begin(), pieces.end(), [&](const Segment& s) {
        return s.normalized() == side.normalized();
      });
      if (!found) throw std::logic_error("cell pieces do not form a quadrilateral");
    }
    cells.emplace(idx, ordered);
  }
  return cells;
}

// Orders unordered boundary-to-boundary chords into trajectory order, starting
// at (a, 0) in direction (q, p). Each bounce point meets exactly two chords.
std::vector<Segment> chain_from_start(const std::vector<Segment>& chords, const Point& start) {
  std::map<Point, std::vector<std::size_t>> incident;
  for (std::size_t k = 0; k < chords.size(); ++k) {
    incident[chords[k].start()].push_back(k);
    incident[chords[k].end()].push_back(k);
  }
  for (const auto& [pt, list] : incident) {
    if (list.size() != 2) throw std::logic_error("orbit chord endpoint is not met by exactly two chords");
  }
  const auto it = incident.find(start);
  if (it == incident.end()) throw std::logic_error("starting point is not on the orbit");

  auto oriented_from = [&](std::size_t k, const Point& from) {
    return chords[k].start() == from ? chords[k] : chords[k].reversed();
  };
  std::size_t current = it->second[0];
  if (oriented_from(current, start).end().x < start.x) current = it->second[1];

  std::vector<Segment> ordered;
  Point at = start;
  const std::size_t first = current;
  do {
    if (ordered.size() >= chords.size()) throw std::logic_error("chord chain does not close");
    const Segment seg = oriented_from(current, at);
    ordered.push_back(seg);
    at = seg.end();
    const auto& list = incident.at(at);
    current = list[0] == current ? list[1] : list[0];
  } while (current != first || at != start);
  if (ordered.size() != chords.size()) throw std::logic_error("orbit chords split into several cycles");
  return ordered;
}

}  // namespace

void require_periodic(const TrajectorySpec& spec) {
  if (classify(spec).periodic()) return;
  // Trace so the error carries the actual corner and bounce count.
  simulate_orbit(spec);
  throw std::logic_error("trajectory classified singular but the trace closed");
}

Sloped::Sloped(Rational a, std::int64_t p, std::int64_t q) : a_(std::move(a)), p_(p), q_(q) {
  require_open_unit(a_);
  if (p_ < 1 || q_ < 1) throw InvalidSpec("p and q must be positive integers");
  if (std::gcd(p_, q_) != 1) throw NotCoprime("gcd(p,q) must be 1");
}

Vertical::Vertical(Rational a) : a_(std::move(a)) { require_open_unit(a_); }

Horizontal::Horizontal(Rational a) : a_(std::move(a)) { require_open_unit(a_); }

const Sloped& TrajectorySpec::sloped() const {
  if (const auto* s = std::get_if<Sloped>(&v_)) return *s;
  throw InvalidSpec("operation requires a sloped trajectory gamma(a, p/q)");
}

const Rational& TrajectorySpec::a() const {
  return std::visit([](const auto& s) -> const Rational& { return s.a(); }, v_);
}

std::string TrajectorySpec::kind_name() const {
  if (std::holds_alternative<Sloped>(v_)) return "sloped";
  if (std::holds_alternative<Vertical>(v_)) return "vertical";
  return "horizontal";
}

std::string TrajectorySpec::describe() const {
  std::ostringstream os;
  if (const auto* s = std::get_if<Sloped>(&v_)) {
    os << "gamma(" << s->a() << ", " << s->p() << "/" << s->q() << ")";
  } else {
    os << kind_name() << "(" << a() << ")";
  }
  return os.str();
}

SingularTrajectory::SingularTrajectory(const TrajectorySpec& spec, Point corner, std::int64_t bounces)
    : ValidationError([&] {
        std::ostringstream os;
        os << "singular trajectory: ";
        if (spec.is_sloped()) {
          const auto& s = spec.sloped();
          os << "a = k/p with k = " << (s.a() * Rational(s.p())).floor() << ", p = " << s.p() << "; ";
        }
        os << spec.describe() << " hits corner " << corner << " after " << bounces << " bounces";
        return os.str();
      }()),
      corner_(std::move(corner)),
      bounces_(bounces) {}

UnfoldedPoint UnfoldedPoint::on_ray(const Sloped& spec, const Rational& y) {
  if (y.sign() < 0) throw std::invalid_argument("unfolded ray point needs y >= 0");
  return {spec.a() + y * ratio(spec.q(), spec.p()), y};
}

Classification classify(const TrajectorySpec& spec) {
  if (const auto* s = std::get_if<Sloped>(&spec.variant())) {
    if ((s->a() * Rational(s->p())).is_integer()) return {Classification::Kind::Singular, std::nullopt};
    return {Classification::Kind::Periodic, 2 * (s->p() + s->q())};
  }
  return {Classification::Kind::Periodic, 2};
}

Point unfold_project(const UnfoldedPoint& pt) {
  const BigInt fx = pt.x.floor();
  const BigInt fy = pt.y.floor();
  const Rational rx = pt.x - Rational(fx);
  const Rational ry = pt.y - Rational(fy);
  const bool x_odd = (fx & 1) != 0;
  const bool y_odd = (fy & 1) != 0;
  return {x_odd ? kOne - rx : rx, y_odd ? kOne - ry : ry};
}

std::vector<Point> bounce_points_bottom(const Sloped& spec) {
  require_periodic(spec);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(spec.p()));
  for (std::int64_t k = 0; k < spec.p(); ++k) {
    out.push_back(unfold_project(UnfoldedPoint::on_ray(spec, Rational(2 * k))));
  }
  return out;
}

BouncePoints bounce_points_unfolded(const Sloped& spec) {
  BouncePoints bp;
  for (const auto& pt : bounce_points_bottom(spec)) bp.bottom.push_back(pt.x);
  for (std::int64_t k = 0; k < spec.p(); ++k) {
    bp.top.push_back(unfold_project(UnfoldedPoint::on_ray(spec, Rational(2 * k + 1))).x);
  }
  // One period of the ray spans x in [a, a + 2q]; even integer x folds to the left side, odd to the right.
  for (std::int64_t m = 1; m <= 2 * spec.q(); ++m) {
    const Rational y = ratio(spec.p(), spec.q()) * (Rational(m) - spec.a());
    const Point folded = unfold_project({Rational(m), y});
    (m % 2 == 0 ? bp.left : bp.right).push_back(folded.y);
  }
  sort_bounces(bp);
  return bp;
}

std::int64_t seed_column(const Sloped& spec) {
  return static_cast<std::int64_t>((spec.a() * Rational(spec.p())).ceil());
}

Orbit simulate_orbit(const TrajectorySpec& spec) {
  Point pos;
  std::int64_t dx = 0, dy = 0;
  std::int64_t safety_limit = 0;
  if (const auto* s = std::get_if<Sloped>(&spec.variant())) {
    pos = {s->a(), kZero};
    dx = s->q();
    dy = s->p();
    safety_limit = 64 * (s->p() + s->q()) + 64;
  } else if (std::holds_alternative<Vertical>(spec.variant())) {
    pos = {spec.a(), kZero};
    dy = 1;
    safety_limit = 64;
  } else {
    pos = {kZero, spec.a()};
    dx = 1;
    safety_limit = 64;
  }
  const Point start = pos;
  const std::int64_t start_dx = dx, start_dy = dy;

  std::vector<Segment> segments;
  do {
    if (static_cast<std::int64_t>(segments.size()) >= safety_limit) {
      throw std::logic_error("simulation did not recur within the safety limit");
    }
    std::optional<Rational> tx, ty;
    if (dx != 0) tx = (dx > 0 ? kOne - pos.x : pos.x) / Rational(dx > 0 ? dx : -dx);
    if (dy != 0) ty = (dy > 0 ? kOne - pos.y : pos.y) / Rational(dy > 0 ? dy : -dy);
    const Rational t = !tx ? *ty : !ty ? *tx : std::min(*tx, *ty);
    Point next = add_scaled(pos, t, dx, dy);
    const bool hit_vertical_side = tx && *tx == t;
    const bool hit_horizontal_side = ty && *ty == t;
    if (hit_vertical_side && hit_horizontal_side) {
      throw SingularTrajectory(spec, next, static_cast<std::int64_t>(segments.size()));
    }
    segments.emplace_back(pos, next);
    if (hit_vertical_side) dx = -dx;
    if (hit_horizontal_side) dy = -dy;
    pos = std::move(next);
  } while (!(pos == start && dx == start_dx && dy == start_dy));

  Orbit orbit{spec, std::move(segments), {}, {}};
  orbit.bounce_points = bounces_of(orbit.segments);
  if (spec.is_sloped()) orbit.cells = clip_to_cells(orbit.segments, spec.sloped().p(), spec.sloped().q());
  return orbit;
}

Orbit build_orbit_by_symmetry(const Sloped& spec) {
  require_periodic(spec);
  const std::int64_t p = spec.p(), q = spec.q();
  const Rational slope = ratio(p, q);
  const Rational& a = spec.a();
  const std::int64_t i0 = seed_column(spec);

  // Seed parallelogram in W_{i0,1}: vertex (a, 0), sides of slope +-p/q.
  const Rational left = ratio(i0 - 1, p), right = ratio(i0, p);
  Parallelogram seed{Point{a, kZero}, Point{right, slope * (right - a)},
                     Point{left + right - a, ratio(1, q)}, Point{left, slope * (a - left)}};

  // Mirroring swaps left/right (vertical axis) or bottom/top (horizontal axis).
  auto mirror_x = [](const Parallelogram& c, const Rational& x0) {
    return Parallelogram{reflect_across_vertical(c[0], x0), reflect_across_vertical(c[3], x0),
                         reflect_across_vertical(c[2], x0), reflect_across_vertical(c[1], x0)};
  };
  auto mirror_y = [](const Parallelogram& c, const Rational& y0) {
    return Parallelogram{reflect_across_horizontal(c[2], y0), reflect_across_horizontal(c[1], y0),
                         reflect_across_horizontal(c[0], y0), reflect_across_horizontal(c[3], y0)};
  };

  std::map<CellIndex, Parallelogram> grid;
  grid.emplace(CellIndex{i0, 1}, seed);
  for (std::int64_t i = i0 + 1; i <= p; ++i) grid.emplace(CellIndex{i, 1}, mirror_x(grid.at({i - 1, 1}), ratio(i - 1, p)));
  for (std::int64_t i = i0 - 1; i >= 1; --i) grid.emplace(CellIndex{i, 1}, mirror_x(grid.at({i + 1, 1}), ratio(i, p)));
  for (std::int64_t j = 2; j <= q; ++j) {
    for (std::int64_t i = 1; i <= p; ++i) grid.emplace(CellIndex{i, j}, mirror_y(grid.at({i, j - 1}), ratio(j - 1, q)));
  }

  Orbit orbit{spec, {}, {}, {}};
  std::vector<Segment> pieces;
  pieces.reserve(grid.size() * 4);
  for (const auto& [idx, v] : grid) {
    CellPieces cp{Segment(v[0], v[1]), Segment(v[1], v[2]), Segment(v[2], v[3]), Segment(v[3], v[0])};
    pieces.insert(pieces.end(), cp.begin(), cp.end());
    orbit.cells.emplace(idx, cp);
  }
  orbit.segments = chain_from_start(canonical_segment_set(pieces), Point{a, kZero});
  orbit.bounce_points = bounces_of(orbit.segments);
  return orbit;
}

std::map<CellIndex, Parallelogram> cell_decomposition(const Orbit& orbit) {
  std::map<CellIndex, Parallelogram> out;
  for (const auto& [idx, pieces] : orbit.cells) {
    out.emplace(idx, Parallelogram{pieces[0].start(), pieces[1].start(), pieces[2].start(), pieces[3].start()});
  }
  return out;
}

std::vector<Segment> canonical_segment_set(std::span<const Segment> pieces) {
  // Group by supporting line: (vertical?, slope, intercept) or (vertical, x).
  using LineKey = std::tuple<bool, Rational, Rational>;
  std::map<LineKey, std::vector<Segment>> lines;
  for (const auto& piece : pieces) {
    const Segment s = piece.normalized();
    const Point d = s.delta();
    if (d.x.sign() == 0) {
      lines[LineKey{true, kZero, s.start().x}].push_back(s);
    } else {
      const Rational slope = d.y / d.x;
      lines[LineKey{false, slope, s.start().y - slope * s.start().x}].push_back(s);
    }
  }
  std::vector<Segment> out;
  for (auto& [key, group] : lines) {
    std::sort(group.begin(), group.end());
    Point lo = group.front().start();
    Point hi = group.front().end();
    for (std::size_t k = 1; k < group.size(); ++k) {
      if (group[k].start() <= hi) {
        hi = std::max(hi, group[k].end());
      } else {
        out.emplace_back(lo, hi);
        lo = group[k].start();
        hi = group[k].end();
      }
    }
    out.emplace_back(lo, hi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Surd orbit_length(const Orbit& orbit) {
  Rational total;
  if (orbit.spec.is_sloped()) {
    const auto& s = orbit.spec.sloped();
    for (const auto& seg : orbit.segments) {
      const Point d = seg.delta();
      const Rational t = abs(d.x) / Rational(s.q());
      if (abs(d.y) != t * Rational(s.p())) throw std::logic_error("segment is not along a primitive direction");
      total += t;
    }
    return {total, BigInt(s.p()) * s.p() + BigInt(s.q()) * s.q()};
  }
  for (const auto& seg : orbit.segments) {
    const Point d = seg.delta();
    total += abs(d.x) + abs(d.y);
  }
  return {total, BigInt(1)};
}

}  // namespace billiard

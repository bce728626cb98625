#pragma once

// Billiard trajectories in the unit square [0,1]^2.
//
// A sloped trajectory starts at (a, 0) heading along (q, p); the period-2
// trajectories are the vertical and horizontal chords. Orbits are built two
// independent ways: by tracing reflections exactly, and by reflecting one
// seed parallelogram across the p x q grid of subrectangles.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "billiard/error.hpp"
#include "billiard/exact.hpp"

namespace billiard {

/// gamma(a, p/q): starts at (a, 0) with direction (q, p). Requires 0 < a < 1, p, q >= 1, gcd(p, q) = 1.
class Sloped {
 public:
  Sloped(Rational a, std::int64_t p, std::int64_t q);

  const Rational& a() const { return a_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return q_; }

  friend bool operator==(const Sloped&, const Sloped&) = default;

 private:
  Rational a_;
  std::int64_t p_;
  std::int64_t q_;
};

/// Chord x = a, traversed up and back.
class Vertical {
 public:
  explicit Vertical(Rational a);
  const Rational& a() const { return a_; }
  friend bool operator==(const Vertical&, const Vertical&) = default;

 private:
  Rational a_;
};

/// Chord y = a, traversed right and back.
class Horizontal {
 public:
  explicit Horizontal(Rational a);
  const Rational& a() const { return a_; }
  friend bool operator==(const Horizontal&, const Horizontal&) = default;

 private:
  Rational a_;
};

class TrajectorySpec {
 public:
  using Variant = std::variant<Sloped, Vertical, Horizontal>;

  TrajectorySpec(Sloped s) : v_(std::move(s)) {}       // NOLINT(google-explicit-constructor)
  TrajectorySpec(Vertical s) : v_(std::move(s)) {}     // NOLINT(google-explicit-constructor)
  TrajectorySpec(Horizontal s) : v_(std::move(s)) {}   // NOLINT(google-explicit-constructor)

  const Variant& variant() const { return v_; }
  bool is_sloped() const { return std::holds_alternative<Sloped>(v_); }
  /// Throws InvalidSpec for the period-2 variants.
  const Sloped& sloped() const;
  const Rational& a() const;
  /// "sloped", "vertical" or "horizontal".
  std::string kind_name() const;
  /// Human-readable name, e.g. "gamma(1/50, 8/5)".
  std::string describe() const;

  friend bool operator==(const TrajectorySpec&, const TrajectorySpec&) = default;

 private:
  Variant v_;
};

struct Classification {
  enum class Kind { Singular, Periodic };
  Kind kind;
  std::optional<std::int64_t> period;

  bool periodic() const { return kind == Kind::Periodic; }
  friend bool operator==(const Classification&, const Classification&) = default;
};

/// Raised when a trajectory runs into a corner of the square.
class SingularTrajectory : public ValidationError {
 public:
  SingularTrajectory(const TrajectorySpec& spec, Point corner, std::int64_t bounces);

  const Point& corner() const { return corner_; }
  /// Number of side bounces made before the corner was reached.
  std::int64_t bounces() const { return bounces_; }

 private:
  Point corner_;
  std::int64_t bounces_;
};

/// Bounce coordinates per side, each list ascending.
struct BouncePoints {
  std::vector<Rational> bottom;  // x-coordinates on y = 0
  std::vector<Rational> top;     // x-coordinates on y = 1
  std::vector<Rational> left;    // y-coordinates on x = 0
  std::vector<Rational> right;   // y-coordinates on x = 1

  friend bool operator==(const BouncePoints&, const BouncePoints&) = default;
};

/// Subrectangle W_{i,j} = [(i-1)/p, i/p] x [(j-1)/q, j/q], 1-based.
struct CellIndex {
  std::int64_t i;
  std::int64_t j;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// The orbit inside one cell: bottom->right, right->top, top->left, left->bottom.
using CellPieces = std::array<Segment, 4>;

/// Parallelogram vertices in cyclic order: on the bottom, right, top, left side of the cell.
using Parallelogram = std::array<Point, 4>;

struct Orbit {
  TrajectorySpec spec;
  std::vector<Segment> segments;  // trajectory order, one per bounce
  BouncePoints bounce_points;
  std::map<CellIndex, CellPieces> cells;  // empty for period-2 orbits

  std::int64_t period() const { return static_cast<std::int64_t>(segments.size()); }
};

/// A point of the unfolded ray y = (p/q)(x - a), y >= 0.
struct UnfoldedPoint {
  Rational x;
  Rational y;

  static UnfoldedPoint on_ray(const Sloped& spec, const Rational& y);
};

Classification classify(const TrajectorySpec& spec);

/// Throws SingularTrajectory (with the corner reached) unless spec is periodic.
void require_periodic(const TrajectorySpec& spec);

/// Folds a point of the plane back into the square by the parities of floor(x), floor(y).
Point unfold_project(const UnfoldedPoint& pt);

/// pi(x_k, 2k) for k = 0..p-1 in order of k, where x_k = a + 2kq/p.
std::vector<Point> bounce_points_bottom(const Sloped& spec);

/// All four sides' bounce points read off the unfolded ray.
BouncePoints bounce_points_unfolded(const Sloped& spec);

/// Column of the seed cell containing (a, 0): ceil(p a).
std::int64_t seed_column(const Sloped& spec);

/// Traces the billiard exactly until the initial (position, direction) recurs.
/// Throws SingularTrajectory on reaching a corner.
Orbit simulate_orbit(const TrajectorySpec& spec);

/// Builds the orbit from the seed parallelogram and its grid reflections, without tracing.
Orbit build_orbit_by_symmetry(const Sloped& spec);

std::map<CellIndex, Parallelogram> cell_decomposition(const Orbit& orbit);

/// Merges collinear overlapping or touching pieces into maximal segments, each
/// normalized, and returns them sorted.
std::vector<Segment> canonical_segment_set(std::span<const Segment> pieces);

/// Total length of one traversal as coeff * sqrt(radicand), computed exactly
/// from the segment parameters along the primitive directions.
Surd orbit_length(const Orbit& orbit);

}  // namespace billiard

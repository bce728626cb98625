#pragma once

// Optimal covering radii: the closed form, the per-class minimum, the
// inscribed-parallelogram bound, and a brute-force grid oracle.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "billiard/exact.hpp"
#include "billiard/trajectory.hpp"

namespace billiard {

/// The value m / sqrt(s), with m >= 0 and s > 0. s is kept unreduced.
class ExactRadius {
 public:
  ExactRadius(Rational m, BigInt s);

  const Rational& m() const { return m_; }
  const BigInt& s() const { return s_; }

  /// m^2 / s, exactly.
  Rational squared() const { return m_ * m_ / Rational(s_); }
  double to_double() const;
  /// "(m)/√s", e.g. "(1/2)/√89".
  std::string to_string() const;

  friend bool operator==(const ExactRadius& lhs, const ExactRadius& rhs) { return lhs.squared() == rhs.squared(); }
  friend std::strong_ordering operator<=>(const ExactRadius& lhs, const ExactRadius& rhs) {
    return lhs.squared() <=> rhs.squared();
  }

 private:
  Rational m_;
  BigInt s_;
};

/// Rectangle ABCD with an inscribed parallelogram PQRS, P on AB at |AP| = ap,
/// |BP| = bp, and sides making angle theta with AB.
struct ParallelogramSpec {
  Rational ap;
  Rational bp;
  ExactRadius sin_theta;
};

/// max(|AP|, |BP|) * sin(theta): the corners of the rectangle are the last points covered.
ExactRadius parallelogram_cover_radius(const ParallelogramSpec& ps);

/// rcov = max({pa}, 1 - {pa}) / sqrt(p^2 + q^2); period-2 chords give max(a, 1 - a).
/// Throws SingularTrajectory for singular specs.
ExactRadius covering_radius(const TrajectorySpec& spec);

struct ClassMinimum {
  ExactRadius radius;           // 1 / (2 sqrt(p^2 + q^2))
  std::vector<Rational> starts; // (2k - 1) / (2p), k = 1..p
};

/// Minimum covering radius over all periodic gamma(a, p/q) with fixed p, q. Throws NotCoprime.
ClassMinimum class_min_radius(std::int64_t p, std::int64_t q);

/// True iff the open r-neighborhood of the orbit contains the square, i.e. r > rcov.
bool covers(const TrajectorySpec& spec, const Rational& r);

struct OracleResult {
  double radius;            // sqrt of squared_radius
  Rational squared_radius;  // exact max over grid points of the squared distance to the orbit
  std::int64_t n;
};

/// Max over grid points (i/n, j/n), 0 <= i, j <= n, of the distance to the nearest
/// orbit segment. A lower bound on rcov, within (sqrt(2)/2)/n of it.
/// Rows may be split across `workers` threads (0 = hardware concurrency); the
/// result does not depend on the split.
OracleResult grid_oracle(const Orbit& orbit, std::int64_t n, unsigned workers = 0);

double grid_oracle_radius(const Orbit& orbit, std::int64_t n);

/// (sqrt(2)/2)/n: farthest any point of the square lies from the grid.
double grid_oracle_bound(std::int64_t n);

struct CoverReport {
  ExactRadius exact;
  double float_value;
  std::optional<double> oracle_estimate;
  std::optional<std::int64_t> grid_n;

  /// oracle <= formula <= oracle + bound + 1e-12; true when no oracle was run.
  bool sandwich_holds() const;
};

CoverReport make_cover_report(const TrajectorySpec& spec, std::optional<std::int64_t> grid_n = std::nullopt);

}  // namespace billiard

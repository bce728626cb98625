#pragma once

// Shortest periodic billiard path whose open r-neighborhood covers the square.
//
// A periodic gamma(a, p/q) has length 2 sqrt(p^2 + q^2) and best covering
// radius 1 / (2 sqrt(p^2 + q^2)), so the planner looks for the smallest
// M > 1/(4 r^2) that is a sum of two coprime squares.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "billiard/exact.hpp"
#include "billiard/trajectory.hpp"

namespace billiard {

using SquarePair = std::pair<std::int64_t, std::int64_t>;

/// The class C_N(p): periodic trajectories of period N = 2(p + q) with p bottom bounces.
class TrajectoryClass {
 public:
  TrajectoryClass(std::int64_t period, std::int64_t p);

  std::int64_t period() const { return period_; }
  std::int64_t p() const { return p_; }
  std::int64_t q() const { return period_ / 2 - p_; }
  bool contains(const Sloped& spec) const { return spec.p() == p_ && spec.q() == q(); }

 private:
  std::int64_t period_;
  std::int64_t p_;
};

/// True iff M = x^2 + y^2 with gcd(x, y) = 1, i.e. 4 does not divide M and no
/// prime factor of M is 3 mod 4.
bool is_properly_representable(std::uint64_t m);

/// Every t in [0, M) with t^2 = -1 (mod M), ascending.
std::vector<std::uint64_t> sqrt_minus_one_roots(std::uint64_t m);

/// One coprime (p, q), p <= q, with p^2 + q^2 = M. Throws NotRepresentable.
SquarePair cornacchia(std::uint64_t m);

/// All coprime (p, q) with 1 <= p <= q and p^2 + q^2 = M, ascending; empty if none.
std::vector<SquarePair> all_primitive_representations(std::uint64_t m);

/// 2 sqrt(p^2 + q^2) for sloped orbits, 2 for the period-2 chords.
Surd path_length(const TrajectorySpec& spec);

struct Period2Alternative {
  TrajectorySpec spec;
  Surd length;
};

struct Plan {
  Rational r;
  Rational threshold;  // 1 / (4 r^2)
  std::uint64_t m;
  std::vector<SquarePair> representations;
  TrajectorySpec canonical_spec;
  std::vector<Rational> all_min_starts;
  Surd path_length;
  /// The mid-line chord, reported when it also covers (r > 1/2). Not compared for optimality.
  std::optional<Period2Alternative> period2_alternative;
};

/// Throws InvalidRadius if r <= 0 or if 1/(4 r^2) exceeds the supported 2^62.
Plan plan_shortest_cover(const Rational& r);

}  // namespace billiard

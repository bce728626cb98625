#pragma once

// Brute-force oracles shared by the unit and acceptance suites. They use only
// doubles, plain integers and exhaustive enumeration, never the library's
// closed forms.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <vector>

namespace oracle {

inline double segment_distance(double px, double py, double ax, double ay, double bx, double by) {
  const double vx = bx - ax, vy = by - ay;
  const double wx = px - ax, wy = py - ay;
  const double t = std::clamp((wx * vx + wy * vy) / (vx * vx + vy * vy), 0.0, 1.0);
  const double ex = wx - t * vx, ey = wy - t * vy;
  return std::sqrt(ex * ex + ey * ey);
}

struct SampledRadius {
  double radius;  // max over samples of the distance to the parallelogram boundary
  double bound;   // half the diagonal of a sampling cell
};

// Rectangle [0,w] x [0,h] with the inscribed parallelogram whose sides run
// parallel to the diagonals, one vertex at (u, 0). Samples a side x side grid.
inline SampledRadius sampled_parallelogram_radius(double w, double h, double u, int side) {
  const double slope = h / w;
  const double px = u, py = 0;
  const double qx = w, qy = (w - u) * slope;
  const double rx = w - u, ry = h;
  const double sx = 0, sy = u * slope;
  double best = 0;
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      const double x = w * i / (side - 1), y = h * j / (side - 1);
      const double d = std::min({segment_distance(x, y, px, py, qx, qy), segment_distance(x, y, qx, qy, rx, ry),
                                 segment_distance(x, y, rx, ry, sx, sy), segment_distance(x, y, sx, sy, px, py)});
      best = std::max(best, d);
    }
  }
  const double dx = w / (side - 1), dy = h / (side - 1);
  return {best, 0.5 * std::sqrt(dx * dx + dy * dy)};
}

// representable[M] for M <= limit, by enumerating every coprime x <= y.
inline std::vector<bool> proper_two_square_table(std::uint64_t limit) {
  std::vector<bool> table(limit + 1, false);
  for (std::uint64_t x = 0; x * x <= limit; ++x) {
    for (std::uint64_t y = x; x * x + y * y <= limit; ++y) {
      if (std::gcd(x, y) == 1) table[x * x + y * y] = true;
    }
  }
  return table;
}

// Coprime (p, q), 1 <= p <= q, p^2 + q^2 = m.
inline std::vector<std::pair<std::int64_t, std::int64_t>> representations(std::int64_t m) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t p = 1; 2 * p * p <= m; ++p) {
    for (std::int64_t q = p; p * p + q * q <= m; ++q) {
      if (p * p + q * q == m && std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  return out;
}

// Smallest m > k^2/4 (the threshold for r = 1/k) with a coprime p, q >= 1 representation.
inline std::int64_t shortest_cover_m_for_inverse_radius(std::int64_t k) {
  for (std::int64_t m = 2;; ++m) {
    if (4 * m <= k * k) continue;  // m > k^2/4  <=>  4m > k^2
    if (!representations(m).empty()) return m;
  }
}

}  // namespace oracle

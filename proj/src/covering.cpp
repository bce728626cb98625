#include "billiard/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

#include "billiard/error.hpp"

namespace billiard {

namespace {

// Segment in doubles, for screening grid points before the exact pass.
struct FastSegment {
  double x0, y0, dx, dy, len2;
  double xmin, xmax, ymin, ymax;

  explicit FastSegment(const Segment& s)
      : x0(s.start().x.to_double()),
        y0(s.start().y.to_double()),
        dx(s.end().x.to_double() - x0),
        dy(s.end().y.to_double() - y0),
        len2(dx * dx + dy * dy),
        xmin(std::min(x0, x0 + dx)),
        xmax(std::max(x0, x0 + dx)),
        ymin(std::min(y0, y0 + dy)),
        ymax(std::max(y0, y0 + dy)) {}

  double squared_distance(double px, double py) const {
    const double wx = px - x0, wy = py - y0;
    double t = (wx * dx + wy * dy) / len2;
    t = std::clamp(t, 0.0, 1.0);
    const double ex = wx - t * dx, ey = wy - t * dy;
    return ex * ex + ey * ey;
  }

  // Lower bound on the distance from any point of the box to this segment.
  double box_distance(double bx0, double bx1, double by0, double by1) const {
    const double gx = std::max({0.0, xmin - bx1, bx0 - xmax});
    const double gy = std::max({0.0, ymin - by1, by0 - ymax});
    return std::sqrt(gx * gx + gy * gy);
  }
};

constexpr double kScreenMargin = 1e-9;

struct Candidate {
  std::int64_t i, j;
  double distance;
};

struct ScanResult {
  double best = -1.0;
  std::vector<Candidate> near_best;

  void offer(std::int64_t i, std::int64_t j, double d) {
    if (d < best - kScreenMargin) return;
    if (d > best) {
      best = d;
      if (near_best.size() > 64) prune();
    }
    near_best.push_back({i, j, d});
  }

  void prune() {
    std::erase_if(near_best, [&](const Candidate& c) { return c.distance < best - kScreenMargin; });
  }
};

}  // namespace

ExactRadius::ExactRadius(Rational m, BigInt s) : m_(std::move(m)), s_(std::move(s)) {
  if (m_.sign() < 0) throw std::invalid_argument("ExactRadius: negative coefficient");
  if (s_ <= 0) throw std::invalid_argument("ExactRadius: radicand must be positive");
}

double ExactRadius::to_double() const { return std::sqrt(squared().to_double()); }

std::string ExactRadius::to_string() const {
  return "(" + m_.to_string() + ")/√" + s_.str();
}

ExactRadius parallelogram_cover_radius(const ParallelogramSpec& ps) {
  if (ps.ap.sign() < 0 || ps.bp.sign() < 0) throw std::invalid_argument("parallelogram offsets must be nonnegative");
  return {std::max(ps.ap, ps.bp) * ps.sin_theta.m(), ps.sin_theta.s()};
}

ExactRadius covering_radius(const TrajectorySpec& spec) {
  require_periodic(spec);
  const Rational one(1);
  if (spec.is_sloped()) {
    const auto& s = spec.sloped();
    const Rational f = frac_part(s.a() * Rational(s.p()));
    return {std::max(f, one - f), BigInt(s.p()) * s.p() + BigInt(s.q()) * s.q()};
  }
  return {std::max(spec.a(), one - spec.a()), BigInt(1)};
}

ClassMinimum class_min_radius(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw InvalidSpec("p and q must be positive integers");
  if (std::gcd(p, q) != 1) throw NotCoprime("gcd(p,q) must be 1");
  ClassMinimum out{ExactRadius(Rational(BigInt(1), BigInt(2)), BigInt(p) * p + BigInt(q) * q), {}};
  for (std::int64_t k = 1; k <= p; ++k) out.starts.emplace_back(BigInt(2 * k - 1), BigInt(2 * p));
  return out;
}

bool covers(const TrajectorySpec& spec, const Rational& r) {
  const ExactRadius rcov = covering_radius(spec);
  if (r.sign() <= 0) return false;
  return r * r * Rational(rcov.s()) > rcov.m() * rcov.m();
}

double grid_oracle_bound(std::int64_t n) { return std::sqrt(2.0) / 2.0 / static_cast<double>(n); }

OracleResult grid_oracle(const Orbit& orbit, std::int64_t n, unsigned workers) {
  if (n < 2) throw std::invalid_argument("grid oracle needs n >= 2");
  if (orbit.segments.empty()) throw std::invalid_argument("grid oracle needs a non-empty orbit");

  std::vector<Segment> exact_segments;
  for (const auto& s : orbit.segments) exact_segments.push_back(s.normalized());
  std::sort(exact_segments.begin(), exact_segments.end());
  exact_segments.erase(std::unique(exact_segments.begin(), exact_segments.end()), exact_segments.end());
  std::vector<FastSegment> fast;
  for (const auto& s : exact_segments) fast.emplace_back(s);

  // Buckets keep only segments that can be nearest for some point inside:
  // distance to a segment is convex, so its max over a box is at a corner.
  const std::int64_t buckets = std::min<std::int64_t>(n, 32);
  const double width = 1.0 / static_cast<double>(buckets);
  std::vector<std::vector<std::uint32_t>> bucket_segments(static_cast<std::size_t>(buckets * buckets));
  for (std::int64_t by = 0; by < buckets; ++by) {
    for (std::int64_t bx = 0; bx < buckets; ++bx) {
      const double x0 = bx * width, x1 = (bx + 1) * width, y0 = by * width, y1 = (by + 1) * width;
      double upper = std::numeric_limits<double>::infinity();
      for (const auto& s : fast) {
        const double worst = std::max({s.squared_distance(x0, y0), s.squared_distance(x1, y0),
                                       s.squared_distance(x0, y1), s.squared_distance(x1, y1)});
        upper = std::min(upper, std::sqrt(worst));
      }
      auto& list = bucket_segments[static_cast<std::size_t>(by * buckets + bx)];
      for (std::uint32_t k = 0; k < fast.size(); ++k) {
        if (fast[k].box_distance(x0, x1, y0, y1) <= upper + kScreenMargin) list.push_back(k);
      }
    }
  }
  auto bucket_of = [&](std::int64_t idx) {
    return std::min<std::int64_t>(idx * buckets / n, buckets - 1);
  };

  auto scan_rows = [&](std::int64_t row_begin, std::int64_t row_end) {
    ScanResult result;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t j = row_begin; j < row_end; ++j) {
      const double y = static_cast<double>(j) * inv_n;
      const std::int64_t by = bucket_of(j);
      for (std::int64_t i = 0; i <= n; ++i) {
        const double x = static_cast<double>(i) * inv_n;
        const auto& list = bucket_segments[static_cast<std::size_t>(by * buckets + bucket_of(i))];
        double best = std::numeric_limits<double>::infinity();
        for (std::uint32_t k : list) best = std::min(best, fast[k].squared_distance(x, y));
        result.offer(i, j, std::sqrt(best));
      }
    }
    result.prune();
    return result;
  };

  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t rows = n + 1;
  workers = static_cast<unsigned>(std::min<std::int64_t>(workers, rows));
  std::vector<ScanResult> partial(workers);
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      const std::int64_t begin = rows * w / workers;
      const std::int64_t end = rows * (w + 1) / workers;
      if (workers == 1) {
        partial[w] = scan_rows(begin, end);
      } else {
        threads.emplace_back([&, w, begin, end] { partial[w] = scan_rows(begin, end); });
      }
    }
  }

  double screened = -1.0;
  for (const auto& part : partial) screened = std::max(screened, part.best);

  // Exact pass over every grid point within the screening margin of the float maximum.
  Rational best_exact(-1);
  const Rational step(BigInt(1), BigInt(n));
  for (const auto& part : partial) {
    for (const auto& c : part.near_best) {
      if (c.distance < screened - kScreenMargin) continue;
      const Point pt{Rational(c.i) * step, Rational(c.j) * step};
      Rational nearest = squared_distance(pt, exact_segments.front());
      for (std::size_t k = 1; k < exact_segments.size(); ++k) {
        nearest = std::min(nearest, squared_distance(pt, exact_segments[k]));
      }
      best_exact = std::max(best_exact, nearest);
    }
  }
  return {std::sqrt(best_exact.to_double()), best_exact, n};
}

double grid_oracle_radius(const Orbit& orbit, std::int64_t n) { return grid_oracle(orbit, n).radius; }

bool CoverReport::sandwich_holds() const {
  if (!oracle_estimate || !grid_n) return true;
  return *oracle_estimate <= float_value &&
         float_value <= *oracle_estimate + grid_oracle_bound(*grid_n) + 1e-12;
}

CoverReport make_cover_report(const TrajectorySpec& spec, std::optional<std::int64_t> grid_n) {
  const ExactRadius exact = covering_radius(spec);
  CoverReport report{exact, exact.to_double(), std::nullopt, std::nullopt};
  if (grid_n) {
    report.oracle_estimate = grid_oracle_radius(simulate_orbit(spec), *grid_n);
    report.grid_n = grid_n;
  }
  return report;
}

}  // namespace billiard

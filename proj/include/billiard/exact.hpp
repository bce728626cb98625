#pragma once

// Exact rational arithmetic and the few planar primitives the orbit code needs.

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace billiard {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision fraction, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& numerator, const BigInt& denominator);

  /// Accepts "n/d", "n", or a decimal literal such as "-0.02" and parses it exactly.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  BigInt floor() const;
  BigInt ceil() const;
  bool is_integer() const { return denominator() == 1; }
  int sign() const { return value_.sign(); }

  /// Within one ulp of the correctly rounded value.
  double to_double() const;
  /// Canonical "n/d" form; integers keep the "/1".
  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) { value_ += rhs.value_; return *this; }
  Rational& operator-=(const Rational& rhs) { value_ -= rhs.value_; return *this; }
  Rational& operator*=(const Rational& rhs) { value_ *= rhs.value_; return *this; }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const { Rational r; r.value_ = -value_; return r; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return boost::multiprecision::numerator(lhs.value_) == boost::multiprecision::numerator(rhs.value_) &&
           boost::multiprecision::denominator(lhs.value_) == boost::multiprecision::denominator(rhs.value_);
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  boost::multiprecision::cpp_rational value_;
};

/// x - floor(x), in [0, 1).
Rational frac_part(const Rational& x);

Rational abs(const Rational& x);

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;
};

std::ostream& operator<<(std::ostream& os, const Point& pt);

/// Directed segment with distinct endpoints.
class Segment {
 public:
  Segment(Point start, Point end);

  const Point& start() const { return start_; }
  const Point& end() const { return end_; }
  Point delta() const { return {end_.x - start_.x, end_.y - start_.y}; }
  /// Same point set, lexicographically smaller endpoint first.
  Segment normalized() const;
  Segment reversed() const { return Segment(end_, start_); }

  friend bool operator==(const Segment&, const Segment&) = default;
  friend auto operator<=>(const Segment&, const Segment&) = default;

 private:
  Point start_;
  Point end_;
};

std::ostream& operator<<(std::ostream& os, const Segment& seg);

/// Exact squared Euclidean distance from pt to the closed segment.
Rational squared_distance(const Point& pt, const Segment& seg);

/// Euclidean distance; the square root is taken only after the exact squared distance.
double point_segment_distance(const Point& pt, const Segment& seg);

Point reflect_across_vertical(const Point& pt, const Rational& x0);
Point reflect_across_horizontal(const Point& pt, const Rational& y0);

/// coeff * sqrt(radicand), radicand > 0.
struct Surd {
  Rational coeff;
  BigInt radicand;

  double to_double() const;
  friend bool operator==(const Surd&, const Surd&) = default;
};

/// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

}  // namespace billiard

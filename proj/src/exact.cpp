#include "billiard/exact.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "billiard/error.hpp"

namespace billiard {

namespace {

using WideFloat = boost::multiprecision::cpp_bin_float_quad;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt parse_digits(std::string_view s) {
  BigInt v = 0;
  for (char c : s) v = v * 10 + (c - '0');
  return v;
}

}  // namespace

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw std::invalid_argument("Rational: zero denominator");
  if (denominator < 0)
    value_ = boost::multiprecision::cpp_rational(-numerator, -denominator);
  else
    value_ = boost::multiprecision::cpp_rational(numerator, denominator);
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
  const BigInt l = boost::multiprecision::numerator(lhs.value_) * boost::multiprecision::denominator(rhs.value_);
  const BigInt r = boost::multiprecision::numerator(rhs.value_) * boost::multiprecision::denominator(lhs.value_);
  if (l < r) return std::strong_ordering::less;
  if (l > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  auto fail = [&]() -> Rational { throw ParseError("cannot parse rational number '" + original + "'"); };

  Rational result;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return fail();
    const BigInt d = parse_digits(den);
    if (d == 0) throw ParseError("zero denominator in '" + original + "'");
    result = Rational(parse_digits(num), d);
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) return fail();
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const BigInt w = whole.empty() ? BigInt(0) : parse_digits(whole);
    const BigInt f = frac.empty() ? BigInt(0) : parse_digits(frac);
    result = Rational(w * scale + f, scale);
  } else {
    if (!all_digits(text)) return fail();
    result = Rational(parse_digits(text));
  }
  return negative ? -result : result;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.sign() == 0) throw std::domain_error("Rational: division by zero");
  value_ /= rhs.value_;
  return *this;
}

BigInt Rational::floor() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  BigInt q = n / d;
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  const BigInt f = floor();
  return is_integer() ? f : BigInt(f + 1);
}

double Rational::to_double() const {
  const BigInt n = numerator();
  const BigInt d = denominator();
  constexpr std::int64_t kExact = std::int64_t{1} << 53;
  if (boost::multiprecision::abs(n) <= kExact && d <= kExact) {
    return n.convert_to<double>() / d.convert_to<double>();
  }
  const WideFloat q = WideFloat(n) / WideFloat(d);
  return q.convert_to<double>();
}

std::string Rational::to_string() const {
  std::ostringstream os;
  os << numerator() << '/' << denominator();
  return os.str();
}

Rational frac_part(const Rational& x) { return x - Rational(x.floor()); }

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Point& pt) {
  return os << '(' << pt.x << ", " << pt.y << ')';
}

Segment::Segment(Point start, Point end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_ == end_) throw std::invalid_argument("Segment: degenerate segment");
}

Segment Segment::normalized() const { return end_ < start_ ? reversed() : *this; }

std::ostream& operator<<(std::ostream& os, const Segment& seg) {
  return os << seg.start() << " -> " << seg.end();
}

Rational squared_distance(const Point& pt, const Segment& seg) {
  const Rational vx = seg.end().x - seg.start().x;
  const Rational vy = seg.end().y - seg.start().y;
  const Rational wx = pt.x - seg.start().x;
  const Rational wy = pt.y - seg.start().y;
  const Rational along = wx * vx + wy * vy;
  if (along.sign() <= 0) return wx * wx + wy * wy;
  const Rational len2 = vx * vx + vy * vy;
  if (along >= len2) {
    const Rational ex = pt.x - seg.end().x;
    const Rational ey = pt.y - seg.end().y;
    return ex * ex + ey * ey;
  }
  // Perpendicular foot inside: cross^2 / |v|^2.
  const Rational cross = wx * vy - wy * vx;
  return cross * cross / len2;
}

double point_segment_distance(const Point& pt, const Segment& seg) {
  return std::sqrt(squared_distance(pt, seg).to_double());
}

Point reflect_across_vertical(const Point& pt, const Rational& x0) {
  return {Rational(2) * x0 - pt.x, pt.y};
}

Point reflect_across_horizontal(const Point& pt, const Rational& y0) {
  return {pt.x, Rational(2) * y0 - pt.y};
}

double Surd::to_double() const {
  const double magnitude = std::sqrt((coeff * coeff * Rational(radicand)).to_double());
  return coeff.sign() < 0 ? -magnitude : magnitude;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

}  // namespace billiard

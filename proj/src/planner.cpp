#include "billiard/planner.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <string>
#include <tuple>

#include "billiard/covering.hpp"
#include "billiard/error.hpp"

namespace billiard {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kDirectSearchLimit = 1'000'000;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of a modulo m, gcd(a, m) = 1.
u64 invmod(u64 a, u64 m) {
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    const __int128 quot = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - quot * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - quot * new_r);
  }
  if (r != 1) throw std::logic_error("invmod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

u64 isqrt64(u64 n) {
  u64 x = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (x > 0 && static_cast<u128>(x) * x > n) --x;
  while (static_cast<u128>(x + 1) * (x + 1) <= n) ++x;
  return x;
}

std::vector<std::pair<u64, int>> factorize(u64 n) {
  std::vector<std::pair<u64, int>> out;
  for (u64 d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// Square root of -1 modulo a prime p = 1 (mod 4): b^((p-1)/4) for a non-residue b.
u64 sqrt_minus_one_mod_prime(u64 p) {
  for (u64 b = 2; b < p; ++b) {
    const u64 c = powmod(b, (p - 1) / 4, p);
    if (mulmod(c, c, p) == p - 1) return c;
  }
  throw std::logic_error("no square root of -1 modulo prime");
}

// Lifts t^2 = -1 (mod p) to modulus p^e.
u64 hensel_lift(u64 t, u64 p, int e) {
  u64 modulus = p;
  for (int k = 1; k < e; ++k) {
    modulus *= p;
    const u64 f = (mulmod(t, t, modulus) + 1) % modulus;
    const u64 correction = mulmod(f, invmod(mulmod(2, t, modulus), modulus), modulus);
    t = (t + modulus - correction) % modulus;
  }
  return t;
}

std::vector<u64> roots_by_direct_search(u64 m) {
  std::vector<u64> roots;
  for (u64 t = 0; t < m; ++t) {
    if ((mulmod(t, t, m) + 1) % m == 0) roots.push_back(t);
  }
  return roots;
}

// Euclidean descent on (M, t) until the remainder drops to floor(sqrt(M)) or below.
std::optional<SquarePair> descend(u64 m, u64 t) {
  const u64 limit = isqrt64(m);
  u64 a = m, b = t;
  if (2 * b <= m) b = m - b;
  while (b > limit) {
    const u64 r = a % b;
    a = b;
    b = r;
  }
  const u64 rest = m - b * b;
  const u64 c = isqrt64(rest);
  if (c * c != rest) return std::nullopt;
  const auto x = static_cast<std::int64_t>(std::min(b, c));
  const auto y = static_cast<std::int64_t>(std::max(b, c));
  if (x < 1 || std::gcd(x, y) != 1) return std::nullopt;
  return SquarePair{x, y};
}

std::vector<SquarePair> representations_by_direct_search(u64 m) {
  std::vector<SquarePair> out;
  for (u64 x = 1; 2 * x * x <= m; ++x) {
    const u64 rest = m - x * x;
    const u64 y = isqrt64(rest);
    if (y * y == rest && std::gcd(x, y) == 1) out.emplace_back(x, y);
  }
  return out;
}

}  // namespace

TrajectoryClass::TrajectoryClass(std::int64_t period, std::int64_t p) : period_(period), p_(p) {
  if (period < 4 || period % 2 != 0) throw InvalidSpec("class period must be an even integer >= 4");
  if (p < 1 || q() < 1) throw InvalidSpec("class needs 1 <= p < period/2");
  if (std::gcd(p, q()) != 1) throw NotCoprime("gcd(p,q) must be 1");
}

bool is_properly_representable(u64 m) {
  if (m == 0 || m % 4 == 0) return false;
  for (const auto& [prime, e] : factorize(m)) {
    if (prime % 4 == 3) return false;
  }
  return true;
}

std::vector<u64> sqrt_minus_one_roots(u64 m) {
  if (m < 2 || !is_properly_representable(m)) return {};
  // CRT over prime powers: each odd p^e contributes +-t, the factor 2 contributes 1.
  std::vector<u64> roots{0};
  u64 modulus = 1;
  for (const auto& [prime, e] : factorize(m)) {
    u64 pe = 1;
    for (int k = 0; k < e; ++k) pe *= prime;
    std::vector<u64> local;
    if (prime == 2) {
      local = {1};
    } else {
      const u64 t = hensel_lift(sqrt_minus_one_mod_prime(prime), prime, e);
      local = {t, pe - t};
    }
    const u64 combined = modulus * pe;
    const u64 inv = invmod(modulus % pe, pe);
    std::vector<u64> next;
    for (u64 r : roots) {
      for (u64 s : local) {
        // x = r + modulus * ((s - r) * inv mod pe)
        const u64 diff = (s + pe - r % pe) % pe;
        next.push_back((r + static_cast<u64>(static_cast<u128>(modulus) * mulmod(diff, inv, pe))) % combined);
      }
    }
    roots = std::move(next);
    modulus = combined;
  }
  for (u64 t : roots) {
    if ((mulmod(t, t, m) + 1) % m != 0) {
      if (m <= kDirectSearchLimit) return roots_by_direct_search(m);
      throw std::logic_error("CRT produced a non-root of -1");
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

SquarePair cornacchia(u64 m) {
  if (m < 2 || !is_properly_representable(m)) {
    throw NotRepresentable(std::to_string(m) + " is not a sum of two coprime positive squares");
  }
  const auto roots = sqrt_minus_one_roots(m);
  if (roots.empty()) throw std::logic_error("no square root of -1 for a representable modulus");
  const auto pair = descend(m, roots.front());
  if (!pair) throw std::logic_error("Cornacchia descent failed for " + std::to_string(m));
  const auto [p, q] = *pair;
  if (static_cast<u128>(p) * p + static_cast<u128>(q) * q != m || std::gcd(p, q) != 1) {
    throw std::logic_error("Cornacchia output failed verification");
  }
  return *pair;
}

std::vector<SquarePair> all_primitive_representations(u64 m) {
  if (m < 2 || !is_properly_representable(m)) return {};
  std::set<SquarePair> found;
  for (u64 t : sqrt_minus_one_roots(m)) {
    if (auto pair = descend(m, t)) found.insert(*pair);
  }
  std::vector<SquarePair> out(found.begin(), found.end());
  if (m <= kDirectSearchLimit && out != representations_by_direct_search(m)) {
    throw std::logic_error("representations of " + std::to_string(m) + " disagree with direct search");
  }
  return out;
}

Surd path_length(const TrajectorySpec& spec) {
  require_periodic(spec);
  if (spec.is_sloped()) {
    const auto& s = spec.sloped();
    return {Rational(2), BigInt(s.p()) * s.p() + BigInt(s.q()) * s.q()};
  }
  return {Rational(2), BigInt(1)};
}

Plan plan_shortest_cover(const Rational& r) {
  if (r.sign() <= 0) throw InvalidRadius("radius must be positive, got r = " + r.to_string());
  const Rational threshold = Rational(1) / (Rational(4) * r * r);
  const BigInt floor = threshold.floor();
  if (floor >= (BigInt(1) << 62)) throw InvalidRadius("radius too small: 1/(4r^2) exceeds 2^62");

  // Strictly greater than the threshold; M = 1 only has the degenerate 1^2 + 0^2.
  u64 m = std::max<u64>(floor.convert_to<u64>() + 1, 2);
  while (!is_properly_representable(m)) ++m;

  auto reps = all_primitive_representations(m);
  if (reps.empty()) throw std::logic_error("representable M without representations");
  const auto [p, q] = reps.front();
  std::vector<Rational> starts;
  for (std::int64_t k = 1; k <= p; ++k) starts.emplace_back(BigInt(2 * k - 1), BigInt(2 * p));

  Plan plan{r,
            threshold,
            m,
            std::move(reps),
            Sloped(Rational(BigInt(1), BigInt(2 * p)), p, q),
            std::move(starts),
            Surd{Rational(2), BigInt(m)},
            std::nullopt};
  const Vertical midline(Rational(BigInt(1), BigInt(2)));
  if (covers(midline, r)) plan.period2_alternative = Period2Alternative{midline, path_length(midline)};
  return plan;
}

}  // namespace billiard

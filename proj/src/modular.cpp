#include "knotchar/modular.hpp"

#include <cstdlib>

#include "knotchar/error.hpp"

namespace knotchar {

namespace {

std::int64_t floor_mod(std::int64_t a, std::int64_t mod) {
  const std::int64_t r = a % mod;
  return r < 0 ? r + mod : r;
}

}  // namespace

KnotType validate_knot(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) {
    throw Error(ErrorCode::NonPositive,
                "(" + std::to_string(m) + ", " + std::to_string(n) + ") must be positive");
  }
  if (m > KnotType::kMaxOrder || n > KnotType::kMaxOrder) {
    throw Error(ErrorCode::TooLarge, "orders are limited to " + std::to_string(KnotType::kMaxOrder));
  }
  if (gcd(m, n) != 1) {
    throw Error(ErrorCode::NotCoprime,
                "gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
  }
  return KnotType(m, n);
}

std::string ComponentId::label() const {
  if (is_red()) return "Red";
  return "Irr(" + std::to_string(k) + "," + std::to_string(kp) + ")";
}

void validate_component(const KnotType& kt, const ComponentId& c) {
  const bool ok = c.kind == ComponentId::Kind::Irr && c.k > 0 && c.k < kt.m() && c.kp > 0 &&
                  c.kp < kt.n() && floor_mod(c.k - c.kp, 2) == 0;
  if (!ok) {
    throw Error(ErrorCode::InvalidComponent,
                c.label() + " is not an irreducible component of (" + std::to_string(kt.m()) +
                    "," + std::to_string(kt.n()) + ")");
  }
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = std::llabs(a);
  b = std::llabs(b);
  while (b != 0) {
    const std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t mod) {
  if (mod < 1) throw Error(ErrorCode::NotInvertible, "modulus must be positive");
  const Bezout b = extended_gcd(floor_mod(a, mod), mod);
  if (b.g != 1) {
    throw Error(ErrorCode::NotInvertible,
                std::to_string(a) + " has no inverse modulo " + std::to_string(mod));
  }
  return floor_mod(b.x, mod);
}

std::int64_t crt(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2) {
  if (m1 < 1 || m2 < 1) throw Error(ErrorCode::Inconsistent, "moduli must be positive");
  r1 = floor_mod(r1, m1);
  r2 = floor_mod(r2, m2);
  const Bezout b = extended_gcd(m1, m2);
  if ((r2 - r1) % b.g != 0) {
    throw Error(ErrorCode::Inconsistent, "x = " + std::to_string(r1) + " mod " +
                                             std::to_string(m1) + " and x = " +
                                             std::to_string(r2) + " mod " + std::to_string(m2));
  }
  const std::int64_t step = m2 / b.g;
  const std::int64_t lcm = m1 * step;
  // x = r1 + m1 * j with m1 * j = (r2 - r1) mod m2.
  const std::int64_t j = floor_mod(((r2 - r1) / b.g) % step * floor_mod(b.x, step), step);
  return floor_mod(r1 + m1 * j, lcm);
}

std::pair<std::int64_t, std::int64_t> bezout_pair(const KnotType& kt) {
  const std::int64_t m = kt.m();
  const std::int64_t n = kt.n();
  // u = n^-1 (mod m), shifted into [-m/2, m/2] with the tie going positive.
  std::int64_t u = m == 1 ? 0 : mod_inverse(n, m);
  if (2 * u > m) u -= m;
  const std::int64_t v = (1 - u * n) / m;
  return {u, v};
}

std::vector<ComponentId> enumerate_components(const KnotType& kt) {
  std::vector<ComponentId> out{ComponentId::red()};
  for (std::int64_t k = 1; k < kt.m(); ++k) {
    for (std::int64_t kp = 1; kp < kt.n(); ++kp) {
      if ((k - kp) % 2 == 0) out.push_back(ComponentId::irr(k, kp));
    }
  }
  return out;
}

std::int64_t irreducible_count(const KnotType& kt) { return (kt.m() - 1) * (kt.n() - 1) / 2; }

IntersectionIndex fold_index(const KnotType& kt, std::int64_t raw) {
  const std::int64_t period = 2 * kt.m() * kt.n();
  raw = floor_mod(raw, period);
  return {raw, std::min(raw, period - raw)};
}

EndpointIndices intersection_indices(const KnotType& kt, const ComponentId& c) {
  validate_component(kt, c);
  const std::int64_t m2 = 2 * kt.m();
  const std::int64_t n2 = 2 * kt.n();
  const std::int64_t l1 = crt(c.k, m2, c.kp, n2);
  const std::int64_t l0 = crt(c.k, m2, n2 - c.kp, n2);
  return {fold_index(kt, l0), fold_index(kt, l1)};
}

}  // namespace knotchar

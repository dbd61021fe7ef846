#pragma once

// Exact integer arithmetic for the component and intersection combinatorics.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace knotchar {

/// Coprime pair (m, n) defining the group <x, y | x^m = y^n>.
class KnotType {
 public:
  static constexpr std::int64_t kMaxOrder = 1'000'000;

  std::int64_t m() const noexcept { return m_; }
  std::int64_t n() const noexcept { return n_; }

  friend bool operator==(const KnotType&, const KnotType&) = default;
  friend KnotType validate_knot(std::int64_t m, std::int64_t n);

 private:
  KnotType(std::int64_t m, std::int64_t n) : m_(m), n_(n) {}
  std::int64_t m_;
  std::int64_t n_;
};

/// Throws Error(NonPositive | TooLarge | NotCoprime).
KnotType validate_knot(std::int64_t m, std::int64_t n);

/// Red, or the irreducible line Irr(k, k') with 0<k<m, 0<k'<n, k = k' mod 2.
struct ComponentId {
  enum class Kind { Red, Irr };

  Kind kind = Kind::Red;
  std::int64_t k = 0;
  std::int64_t kp = 0;

  static ComponentId red() { return {}; }
  static ComponentId irr(std::int64_t k, std::int64_t kp) { return {Kind::Irr, k, kp}; }

  bool is_red() const noexcept { return kind == Kind::Red; }
  std::string label() const;

  friend bool operator==(const ComponentId&, const ComponentId&) = default;
};

/// Throws Error(InvalidComponent) unless c is a valid Irr component of kt.
void validate_component(const KnotType& kt, const ComponentId& c);

struct IntersectionIndex {
  std::int64_t raw = 0;     // l in (0, 2mn)
  std::int64_t folded = 0;  // min(l, 2mn - l), in (0, mn)

  friend bool operator==(const IntersectionIndex&, const IntersectionIndex&) = default;
};

/// Index pair for the endpoints r = 0 (l0) and r = 1 (l1) of an Irr line.
struct EndpointIndices {
  IntersectionIndex l0;
  IntersectionIndex l1;
};

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).
struct Bezout {
  std::int64_t g;
  std::int64_t x;
  std::int64_t y;
};
Bezout extended_gcd(std::int64_t a, std::int64_t b);

/// Inverse of a modulo mod in [0, mod). Throws Error(NotInvertible).
std::int64_t mod_inverse(std::int64_t a, std::int64_t mod);

/// Solution of x = r1 (mod m1), x = r2 (mod m2) in [0, lcm(m1, m2)).
/// Throws Error(Inconsistent) when r1 != r2 mod gcd(m1, m2).
std::int64_t crt(std::int64_t r1, std::int64_t m1, std::int64_t r2, std::int64_t m2);

/// (u, v) with u*n + v*m = 1 and |u| minimal (ties broken toward positive u).
std::pair<std::int64_t, std::int64_t> bezout_pair(const KnotType& kt);

/// [Red] then every Irr(k, k') sorted by (k, k').
std::vector<ComponentId> enumerate_components(const KnotType& kt);

/// Number of irreducible lines, (m - 1)(n - 1) / 2.
std::int64_t irreducible_count(const KnotType& kt);

/// Fold l into (0, mn) under t -> 1/t.
IntersectionIndex fold_index(const KnotType& kt, std::int64_t raw);

/// t_l = exp(i pi l / mn) meets the line at r = 1 when t^n = lambda and
/// t^m = mu, and at r = 0 when t^n = lambda and t^m = 1/mu.
EndpointIndices intersection_indices(const KnotType& kt, const ComponentId& c);

}  // namespace knotchar

#include "knotchar/variety.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "knotchar/error.hpp"

namespace knotchar {

namespace {

constexpr double kPi = std::numbers::pi;

Complex pair_sum(Complex t, std::int64_t j) {
  const Complex tj = ipow(t, j);
  return tj + 1.0 / tj;
}

// (t^(2j) - 1) / (t^2 - 1) as 1 + t^2 + ... + t^(2j - 2).
Complex geometric_quotient(Complex t, std::int64_t j) {
  const Complex t2 = t * t;
  Complex term = 1.0;
  Complex sum = 0.0;
  for (std::int64_t i = 0; i < j; ++i) {
    sum += term;
    term *= t2;
  }
  return sum;
}

}  // namespace

double distance(const CharPoint& p, const CharPoint& q) {
  return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c)});
}

CharPoint psi_of_pair(const RepPair& p) {
  return {p.A.mat().trace(), p.B.mat().trace(), (p.A.mat() * p.B.mat()).trace()};
}

CharPoint psi_red(const KnotType& kt, Complex t) {
  if (t == 0.0) throw Error(ErrorCode::ZeroParameter, "t must be nonzero");
  return {pair_sum(t, kt.n()), pair_sum(t, kt.m()), pair_sum(t, kt.n() + kt.m())};
}

IrrLine irr_line(const KnotType& kt, const ComponentId& c) {
  const Complex lambda = irr_lambda(kt, c);
  const Complex mu = irr_mu(kt, c);
  const Complex lambda_inv = std::conj(lambda);
  const Complex mu_inv = std::conj(mu);
  const CharPoint base{lambda + lambda_inv, mu + mu_inv, lambda * mu_inv + lambda_inv * mu};
  const CharPoint direction{0.0, 0.0, (lambda - lambda_inv) * (mu - mu_inv)};
  return {c, lambda, mu, base, direction};
}

CharPoint psi_irr(const KnotType& kt, const IrredParam& p) {
  const IrrLine line = irr_line(kt, p.component);
  return {line.base.a, line.base.b, line.base.c + p.r * line.direction.c};
}

Complex root_parameter(const KnotType& kt, std::int64_t l) {
  return std::polar(1.0, kPi * static_cast<double>(l) / static_cast<double>(kt.m() * kt.n()));
}

VarietyDescription enumerate_variety(const KnotType& kt) {
  VarietyDescription v{kt, enumerate_components(kt), {}, {}, {}};
  const double mn = static_cast<double>(kt.m() * kt.n());
  for (const ComponentId& c : v.components) {
    if (c.is_red()) continue;
    v.lines.push_back(irr_line(kt, c));
    const EndpointIndices idx = intersection_indices(kt, c);
    for (const auto& [endpoint, index] : {std::pair{Endpoint::R0, idx.l0}, std::pair{Endpoint::R1, idx.l1}}) {
      const double s = 2.0 * std::cos(kPi * static_cast<double>(index.folded) / mn);
      v.intersections.push_back({c, endpoint, index, s, psi_red(kt, root_parameter(kt, index.raw))});
    }
  }
  v.counts = {static_cast<std::int64_t>(v.lines.size()),
              static_cast<std::int64_t>(v.intersections.size())};
  if (v.counts.irr_lines != irreducible_count(kt) ||
      v.counts.intersection_points != 2 * irreducible_count(kt)) {
    throw std::logic_error("component counts disagree with (m-1)(n-1)/2");
  }
  return v;
}

std::array<Complex, 3> tangent_red(const KnotType& kt, Complex t) {
  if (t == 0.0) throw Error(ErrorCode::ZeroParameter, "t must be nonzero");
  auto entry = [t](std::int64_t j) {
    return static_cast<double>(j) * ipow(t, 1 - j) * geometric_quotient(t, j);
  };
  return {entry(kt.n()), entry(kt.m()), entry(kt.n() + kt.m())};
}

bool nodal_check(const KnotType& kt, const IntersectionRecord& rec, double tol) {
  const auto tangent = tangent_red(kt, root_parameter(kt, rec.index.folded));
  return std::abs(tangent[0]) > tol || std::abs(tangent[1]) > tol;
}

Complex trace_poly(std::int64_t j, Complex s) {
  if (j < 0) throw Error(ErrorCode::InvalidInput, "trace_poly degree must be >= 0");
  Complex prev = 2.0;
  if (j == 0) return prev;
  Complex cur = s;
  for (std::int64_t i = 1; i < j; ++i) {
    const Complex next = s * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<PointMatch> classify_point(const KnotType& kt, const CharPoint& q,
                                       const Tolerances& tol) {
  std::vector<PointMatch> matches;

  // t^n is a root of w^2 - a w + 1; take the larger root and its inverse.
  const Complex disc = std::sqrt(q.a * q.a - 4.0);
  Complex w = 0.5 * (q.a + disc);
  const Complex w_other = 0.5 * (q.a - disc);
  if (std::abs(w_other) > std::abs(w)) w = w_other;
  const std::int64_t n = kt.n();
  const double radius = std::pow(std::abs(w), 1.0 / static_cast<double>(n));
  const double angle = std::arg(w);
  std::vector<Complex> reds;
  for (std::int64_t j = 0; j < n; ++j) {
    const Complex root =
        std::polar(radius, (angle + 2.0 * kPi * static_cast<double>(j)) / static_cast<double>(n));
    for (const Complex t : {root, 1.0 / root}) {
      if (distance(psi_red(kt, t), q) > tol.membership) continue;
      const Complex s = t + 1.0 / t;
      const bool seen = std::any_of(reds.begin(), reds.end(),
                                    [&](Complex other) { return std::abs(other - s) <= tol.dedup; });
      if (!seen) reds.push_back(s);
    }
  }
  for (const Complex s : reds) matches.push_back({ComponentId::red(), s});

  for (const ComponentId& c : enumerate_components(kt)) {
    if (c.is_red()) continue;
    const IrrLine line = irr_line(kt, c);
    if (std::abs(q.a - line.base.a) > tol.membership ||
        std::abs(q.b - line.base.b) > tol.membership) {
      continue;
    }
    matches.push_back({c, (q.c - line.base.c) / line.direction.c});
  }
  return matches;
}

}  // namespace knotchar

#pragma once

// The trace embedding (tr A, tr B, tr AB) of the character variety and the
// combinatorial description of its components.

#include <array>
#include <vector>

#include "knotchar/linalg.hpp"
#include "knotchar/modular.hpp"
#include "knotchar/reps.hpp"
#include "knotchar/tolerance.hpp"

namespace knotchar {

/// (tr A, tr B, tr AB).
struct CharPoint {
  Complex a;
  Complex b;
  Complex c;

  friend bool operator==(const CharPoint&, const CharPoint&) = default;
};

/// Max coordinate modulus of p - q.
double distance(const CharPoint& p, const CharPoint& q);

enum class Endpoint { R0, R1 };

struct IntersectionRecord {
  ComponentId component;
  Endpoint endpoint = Endpoint::R0;
  IntersectionIndex index;
  double s = 0.0;
  CharPoint point;

  friend bool operator==(const IntersectionRecord&, const IntersectionRecord&) = default;
};

/// Image of one irreducible line: base + r * direction.
struct IrrLine {
  ComponentId component;
  Complex lambda;
  Complex mu;
  CharPoint base;
  CharPoint direction;

  friend bool operator==(const IrrLine&, const IrrLine&) = default;
};

struct VarietyCounts {
  std::int64_t irr_lines = 0;
  std::int64_t intersection_points = 0;

  friend bool operator==(const VarietyCounts&, const VarietyCounts&) = default;
};

/// `lines[i]` describes `components[i + 1]`; intersections hold the r0 and
/// r1 records of each line in the same order.
struct VarietyDescription {
  KnotType kt;
  std::vector<ComponentId> components;
  std::vector<IrrLine> lines;
  std::vector<IntersectionRecord> intersections;
  VarietyCounts counts;

  friend bool operator==(const VarietyDescription&, const VarietyDescription&) = default;
};

CharPoint psi_of_pair(const RepPair& p);

/// (t^n + t^-n, t^m + t^-m, t^(n+m) + t^-(n+m)). Throws Error(ZeroParameter).
CharPoint psi_red(const KnotType& kt, Complex t);

/// (lambda + 1/lambda, mu + 1/mu, lambda/mu + mu/lambda + r (lambda - 1/lambda)(mu - 1/mu)).
CharPoint psi_irr(const KnotType& kt, const IrredParam& p);

/// Base point psi_irr(r = 0) and the unnormalized direction (0, 0, (lambda - 1/lambda)(mu - 1/mu)).
IrrLine irr_line(const KnotType& kt, const ComponentId& c);

/// exp(i pi l / mn).
Complex root_parameter(const KnotType& kt, std::int64_t l);

VarietyDescription enumerate_variety(const KnotType& kt);

/// d psi_red / ds, with (t^2j - 1)/(t^2 - 1) summed as a geometric series
/// so that t = +-1 needs no special case. Throws Error(ZeroParameter).
std::array<Complex, 3> tangent_red(const KnotType& kt, Complex t);

/// True when the reducible tangent at the record is independent of the
/// irreducible direction (0, 0, *), i.e. one of its first two entries exceeds tol.
bool nodal_check(const KnotType& kt, const IntersectionRecord& rec, double tol = 1e-6);

/// p_j(s) with p_j(t + 1/t) = t^j + t^-j.
Complex trace_poly(std::int64_t j, Complex s);

struct PointMatch {
  ComponentId component;
  Complex parameter;  // s for Red, r for Irr
};

/// Every component containing q within tol.membership (CharPoint metric).
/// Reducible solutions are found in closed form among the 2n roots
/// t^n = (a +- sqrt(a^2 - 4)) / 2 and reported once per s.
std::vector<PointMatch> classify_point(const KnotType& kt, const CharPoint& q,
                                       const Tolerances& tol = {});

}  // namespace knotchar

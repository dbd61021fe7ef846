#include "knotchar/reps.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "knotchar/error.hpp"

namespace knotchar {

namespace {

constexpr double kPi = std::numbers::pi;

bool near_pm_identity(const Mat2& m, double tol) {
  return max_abs_diff(m, Mat2::identity()) <= tol ||
         max_abs_diff(m, Mat2::scalar(-1.0)) <= tol;
}

// Sine of the angle between Bv and v; zero iff v is an eigenvector of B.
double eigen_defect(const Mat2& b, const Vec2& v) {
  const Vec2 bv = b * v;
  const double scale = norm(bv) * norm(v);
  if (scale == 0.0) return 0.0;
  return std::abs(bracket(bv, v)) / scale;
}

Vec2 any_eigenline(const EigenResult& e) {
  if (const auto* d = std::get_if<EigenDistinct>(&e)) return d->v1;
  if (const auto* nd = std::get_if<EigenNonDiagonalizable>(&e)) return nd->v;
  return {1.0, 0.0};
}

// <v, Mv> / <v, v> for an eigenvector v.
Complex eigenvalue_on(const Mat2& m, const Vec2& v) {
  const Vec2 mv = m * v;
  const Complex num = std::conj(v.x) * mv.x + std::conj(v.y) * mv.y;
  const double den = std::norm(v.x) + std::norm(v.y);
  return num / den;
}

}  // namespace

Complex irr_lambda(const KnotType& kt, const ComponentId& c) {
  validate_component(kt, c);
  return std::polar(1.0, kPi * static_cast<double>(c.k) / static_cast<double>(kt.m()));
}

Complex irr_mu(const KnotType& kt, const ComponentId& c) {
  validate_component(kt, c);
  return std::polar(1.0, kPi * static_cast<double>(c.kp) / static_cast<double>(kt.n()));
}

RepPair build_reducible(const KnotType& kt, Complex t) {
  if (t == 0.0) throw Error(ErrorCode::ZeroParameter, "t must be nonzero");
  const Complex tn = ipow(t, kt.n());
  const Complex tm = ipow(t, kt.m());
  return {UniMat(Mat2::diag(tn, 1.0 / tn)), UniMat(Mat2::diag(tm, 1.0 / tm)), kt};
}

RepPair build_irreducible(const KnotType& kt, const IrredParam& p) {
  const Complex lambda = irr_lambda(kt, p.component);
  const Complex mu = irr_mu(kt, p.component);
  const Complex mu_inv = std::conj(mu);
  const Complex gap = mu - mu_inv;
  const Complex r = p.r;
  const Mat2 b{r * gap + mu_inv, (1.0 - r) * gap, r * gap, mu - r * gap};
  return {UniMat(Mat2::diag(lambda, std::conj(lambda))), UniMat(b), kt};
}

double relation_defect(const RepPair& p) {
  return max_abs_diff(power(p.A.mat(), p.kt.m()), power(p.B.mat(), p.kt.n()));
}

double scaled_relation_defect(const RepPair& p) {
  const double scale = std::max({1.0, std::pow(max_abs(p.A), static_cast<double>(p.kt.m())),
                                 std::pow(max_abs(p.B), static_cast<double>(p.kt.n()))});
  return relation_defect(p) / scale;
}

RepPair conjugate_pair(const RepPair& p, const UniMat& P) {
  // Roundoff in det grows with the condition number of P.
  return {UniMat(conjugate(p.A, P), 1e-6), UniMat(conjugate(p.B, P), 1e-6), p.kt};
}

std::string_view to_string(ReducibleReason reason) {
  switch (reason) {
    case ReducibleReason::SharedEigenvectorGeneric: return "SharedEigenvectorGeneric";
    case ReducibleReason::CaseA_PowerNotCentral: return "CaseA_PowerNotCentral";
    case ReducibleReason::CaseB_CentralGenerator: return "CaseB_CentralGenerator";
    case ReducibleReason::CaseC_NonDiagonalizable: return "CaseC_NonDiagonalizable";
  }
  return "Unknown";
}

ReducibilityVerdict classify_reducibility(const RepPair& p, const Tolerances& tol) {
  const double defect = scaled_relation_defect(p);
  if (!(defect <= tol.relation)) {
    throw Error(ErrorCode::RelationViolated, "scaled |A^m - B^n| = " + std::to_string(defect));
  }
  const Mat2& a = p.A.mat();
  const Mat2& b = p.B.mat();

  const bool a_central = near_pm_identity(a, tol.entry);
  const bool b_central = near_pm_identity(b, tol.entry);
  if (a_central || b_central) {
    const Vec2 line = a_central ? any_eigenline(eigen(p.B, tol)) : any_eigenline(eigen(p.A, tol));
    return {true, ReducibleReason::CaseB_CentralGenerator, line};
  }

  const EigenResult ea = eigen(p.A, tol);
  if (const auto* nd = std::get_if<EigenNonDiagonalizable>(&ea)) {
    return {true, ReducibleReason::CaseC_NonDiagonalizable, nd->v};
  }
  const EigenResult eb = eigen(p.B, tol);
  if (const auto* nd = std::get_if<EigenNonDiagonalizable>(&eb)) {
    return {true, ReducibleReason::CaseC_NonDiagonalizable, nd->v};
  }

  // Neither generator is central, so both are Distinct from here on.
  // A is diagonalizable here, so A^m = +-Id exactly when lambda^m = +-1.
  const auto& da = std::get<EigenDistinct>(ea);
  const Complex lambda_m = ipow(da.lambda, p.kt.m());
  if (std::min(std::abs(lambda_m - 1.0), std::abs(lambda_m + 1.0)) > tol.entry) {
    return {true, ReducibleReason::CaseA_PowerNotCentral, da.v1};
  }
  for (const Vec2& v : {da.v1, da.v2}) {
    if (eigen_defect(b, v) <= tol.entry) {
      return {true, ReducibleReason::SharedEigenvectorGeneric, v};
    }
  }
  return {false, ReducibleReason::SharedEigenvectorGeneric, {}};
}

Complex semisimplify(const RepPair& p, const Tolerances& tol) {
  const ReducibilityVerdict verdict = classify_reducibility(p, tol);
  if (!verdict.reducible) throw Error(ErrorCode::NotReducible, "pair is irreducible");
  const Complex lambda = eigenvalue_on(p.A, verdict.common_line);
  const Complex mu = eigenvalue_on(p.B, verdict.common_line);
  // With u n + v m = 1: t^n = lambda and t^m = mu because lambda^m = mu^n.
  const auto [u, v] = bezout_pair(p.kt);
  const Complex t = ipow(lambda, u) * ipow(mu, v);
  return t + 1.0 / t;
}

Complex cross_ratio_r(const Vec2& e1, const Vec2& e2, const Vec2& f1, const Vec2& f2) {
  // r = 1 / (1 - z), z = [f2 e2][f1 e1] / ([f2 e1][f1 e2]), with the
  // denominator rewritten by the Plucker relation to avoid cancellation.
  return bracket(e1, f2) * bracket(f1, e2) / (bracket(f1, f2) * bracket(e1, e2));
}

IrredParam canonicalize(const KnotType& kt, Complex lambda, Complex mu, Complex r, double tol) {
  if (lambda.imag() < 0.0) {
    lambda = 1.0 / lambda;
    r = 1.0 - r;
  }
  if (mu.imag() < 0.0) {
    mu = 1.0 / mu;
    r = 1.0 - r;
  }
  auto root_index = [tol](Complex z, std::int64_t order, const char* name) {
    const Complex zp = ipow(z, order);
    if (std::min(std::abs(zp - 1.0), std::abs(zp + 1.0)) > tol) {
      throw Error(ErrorCode::EigenvalueNotRootOfUnity,
                  std::string(name) + "^" + std::to_string(order) + " is not +-1");
    }
    return static_cast<std::int64_t>(std::llround(std::arg(z) * static_cast<double>(order) / kPi));
  };
  const ComponentId c = ComponentId::irr(root_index(lambda, kt.m(), "lambda"),
                                         root_index(mu, kt.n(), "mu"));
  try {
    validate_component(kt, c);
  } catch (const Error& e) {
    throw Error(ErrorCode::EigenvalueNotRootOfUnity, e.what());
  }
  return {c, r};
}

IrredParam double_ratio(const RepPair& p, const Tolerances& tol) {
  const ReducibilityVerdict verdict = classify_reducibility(p, tol);
  if (verdict.reducible) {
    throw Error(ErrorCode::NotIrreducible,
                "pair is reducible (" + std::string(to_string(verdict.reason)) + ")");
  }
  const auto ea = std::get<EigenDistinct>(eigen(p.A, tol));
  const auto eb = std::get<EigenDistinct>(eigen(p.B, tol));
  const Complex r = cross_ratio_r(ea.v1, ea.v2, eb.v1, eb.v2);
  return canonicalize(p.kt, ea.lambda, eb.lambda, r, tol.relation);
}

Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'x': w.push_back(Letter::X); break;
      case 'X': w.push_back(Letter::XInv); break;
      case 'y': w.push_back(Letter::Y); break;
      case 'Y': w.push_back(Letter::YInv); break;
      default:
        throw Error(ErrorCode::InvalidInput, std::string("unknown letter '") + ch + "'");
    }
  }
  return w;
}

Complex character_eval(const RepPair& p, const Word& w) {
  const UniMat a_inv = inverse(p.A);
  const UniMat b_inv = inverse(p.B);
  Mat2 product = Mat2::identity();
  for (Letter letter : w) {
    switch (letter) {
      case Letter::X: product = product * p.A.mat(); break;
      case Letter::XInv: product = product * a_inv.mat(); break;
      case Letter::Y: product = product * p.B.mat(); break;
      case Letter::YInv: product = product * b_inv.mat(); break;
    }
  }
  return product.trace();
}

}  // namespace knotchar

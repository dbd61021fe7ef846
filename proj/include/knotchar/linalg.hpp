#pragma once

// Complex 2x2 linear algebra for SL(2,C) computations.

#include <complex>
#include <random>
#include <variant>

#include "knotchar/tolerance.hpp"

namespace knotchar {

using Complex = std::complex<double>;

/// Integer power by repeated squaring; negative exponents invert first.
Complex ipow(Complex z, long long e);

struct Vec2 {
  Complex x;
  Complex y;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  Complex a;
  Complex b;
  Complex c;
  Complex d;

  static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 diag(Complex p, Complex q) { return {p, 0.0, 0.0, q}; }
  static Mat2 scalar(Complex s) { return {s, 0.0, 0.0, s}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Mat2 operator*(const Mat2& m, const Mat2& n);
Mat2 operator+(const Mat2& m, const Mat2& n);
Mat2 operator-(const Mat2& m, const Mat2& n);
Mat2 operator*(Complex s, const Mat2& m);
Vec2 operator*(const Mat2& m, const Vec2& v);

inline Mat2 mul(const Mat2& m, const Mat2& n) { return m * n; }
inline Complex trace(const Mat2& m) { return m.trace(); }
inline Complex det(const Mat2& m) { return m.det(); }

/// Largest entry modulus.
double max_abs(const Mat2& m);
/// Largest entry modulus of m - n.
double max_abs_diff(const Mat2& m, const Mat2& n);

/// A matrix with determinant 1 (within Tolerances::construct).
class UniMat {
 public:
  UniMat() : m_(Mat2::identity()) {}
  /// Throws Error(NotUnimodular) if |det - 1| exceeds tol.
  explicit UniMat(const Mat2& m, double tol = Tolerances{}.construct);

  const Mat2& mat() const noexcept { return m_; }
  operator const Mat2&() const noexcept { return m_; }

  friend bool operator==(const UniMat&, const UniMat&) = default;

 private:
  struct Trusted {};
  UniMat(const Mat2& m, Trusted) : m_(m) {}
  friend UniMat inverse(const UniMat& m);
  friend UniMat power(const UniMat& m, long long e);

  Mat2 m_;
};

/// Adjugate inverse (valid because det = 1).
UniMat inverse(const UniMat& m);

/// Binary exponentiation; power(m, 0) is the identity. Requires e >= 0.
Mat2 power(const Mat2& m, long long e);
/// As above, negative exponents go through the inverse.
UniMat power(const UniMat& m, long long e);

/// P^-1 M P.
Mat2 conjugate(const Mat2& m, const UniMat& p);

/// Determinant of the matrix with columns v, w.
inline Complex bracket(const Vec2& v, const Vec2& w) { return v.x * w.y - v.y * w.x; }

double norm(const Vec2& v);
Vec2 normalized(const Vec2& v);

/// Two eigenvalues lambda, 1/lambda with their eigenvectors (unnormalized).
struct EigenDistinct {
  Complex lambda;
  Vec2 v1;
  Complex lambda_inv;
  Vec2 v2;
};

/// M = sign * Id.
struct EigenScalar {
  int sign;
};

/// Single eigenvalue sign = +-1 with a one-dimensional eigenline.
struct EigenNonDiagonalizable {
  int sign;
  Vec2 v;
};

using EigenResult = std::variant<EigenDistinct, EigenScalar, EigenNonDiagonalizable>;

/// Total classification of a unimodular matrix. Distinct when
/// |trace^2 - 4| > tol.degenerate; otherwise lambda = sign(Re trace) and the
/// result is Scalar when M is entrywise within tol.entry of lambda*Id.
EigenResult eigen(const UniMat& m, const Tolerances& tol = {});

/// Entries a, b, c standard complex Gaussian, d solved from ad - bc = 1.
/// Resamples while |a| < 1e-6; throws Error(SamplingFailed) after 100 tries.
UniMat random_unimodular(std::mt19937_64& rng);

}  // namespace knotchar

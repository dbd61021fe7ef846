#include "knotchar/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "knotchar/error.hpp"

namespace knotchar {

Complex ipow(Complex z, long long e) {
  if (e < 0) {
    z = 1.0 / z;
    e = -e;
  }
  Complex result = 1.0;
  while (e > 0) {
    if (e & 1) result *= z;
    z *= z;
    e >>= 1;
  }
  return result;
}

Mat2 operator*(const Mat2& m, const Mat2& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
          m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

Mat2 operator+(const Mat2& m, const Mat2& n) {
  return {m.a + n.a, m.b + n.b, m.c + n.c, m.d + n.d};
}

Mat2 operator-(const Mat2& m, const Mat2& n) {
  return {m.a - n.a, m.b - n.b, m.c - n.c, m.d - n.d};
}

Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a * v.x + m.b * v.y, m.c * v.x + m.d * v.y};
}

double max_abs(const Mat2& m) {
  return std::max({std::abs(m.a), std::abs(m.b), std::abs(m.c), std::abs(m.d)});
}

double max_abs_diff(const Mat2& m, const Mat2& n) { return max_abs(m - n); }

UniMat::UniMat(const Mat2& m, double tol) : m_(m) {
  const double defect = std::abs(m.det() - 1.0);
  if (!(defect <= tol)) {
    throw Error(ErrorCode::NotUnimodular, "|det - 1| = " + std::to_string(defect));
  }
}

UniMat inverse(const UniMat& m) {
  const Mat2& x = m.mat();
  return UniMat({x.d, -x.b, -x.c, x.a}, UniMat::Trusted{});
}

Mat2 power(const Mat2& m, long long e) {
  if (e < 0) throw Error(ErrorCode::InvalidInput, "negative power of a general matrix");
  Mat2 result = Mat2::identity();
  Mat2 base = m;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

UniMat power(const UniMat& m, long long e) {
  if (e < 0) return power(inverse(m), -e);
  return UniMat(power(m.mat(), e), UniMat::Trusted{});
}

Mat2 conjugate(const Mat2& m, const UniMat& p) { return inverse(p).mat() * m * p.mat(); }

double norm(const Vec2& v) { return std::hypot(std::abs(v.x), std::abs(v.y)); }

Vec2 normalized(const Vec2& v) {
  const double n = norm(v);
  return {v.x / n, v.y / n};
}

namespace {

// Kernel of (M - lambda Id), taken from whichever row has larger magnitude.
Vec2 eigenline(const Mat2& m, Complex lambda) {
  const Vec2 from_top{m.b, lambda - m.a};
  const Vec2 from_bottom{lambda - m.d, m.c};
  return norm(from_top) >= norm(from_bottom) ? from_top : from_bottom;
}

}  // namespace

EigenResult eigen(const UniMat& um, const Tolerances& tol) {
  const Mat2& m = um.mat();
  const Complex tr = m.trace();
  const Complex disc2 = tr * tr - 4.0;
  if (std::abs(disc2) > tol.degenerate) {
    const Complex disc = std::sqrt(disc2);
    const Complex plus = 0.5 * (tr + disc);
    const Complex minus = 0.5 * (tr - disc);
    // The product of the roots is 1; derive the smaller from the larger.
    Complex lambda;
    Complex lambda_inv;
    if (std::abs(plus) >= std::abs(minus)) {
      lambda = plus;
      lambda_inv = 1.0 / plus;
    } else {
      lambda_inv = minus;
      lambda = 1.0 / minus;
    }
    return EigenDistinct{lambda, eigenline(m, lambda), lambda_inv, eigenline(m, lambda_inv)};
  }
  const int sign = tr.real() >= 0.0 ? 1 : -1;
  if (max_abs_diff(m, Mat2::scalar(static_cast<double>(sign))) <= tol.entry) {
    return EigenScalar{sign};
  }
  return EigenNonDiagonalizable{sign, eigenline(m, static_cast<double>(sign))};
}

UniMat random_unimodular(std::mt19937_64& rng) {
  // Standard complex Gaussian: unit total variance.
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  auto sample = [&] {
    const double re = normal(rng);
    const double im = normal(rng);
    return Complex(re, im);
  };
  for (int attempt = 0; attempt < 100; ++attempt) {
    const Complex a = sample();
    const Complex b = sample();
    const Complex c = sample();
    if (std::abs(a) < 1e-6) continue;
    const Complex d = (1.0 + b * c) / a;
    return UniMat({a, b, c, d});
  }
  throw Error(ErrorCode::SamplingFailed, "no usable sample in 100 attempts");
}

}  // namespace knotchar

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "knotchar/error.hpp"
#include "knotchar/linalg.hpp"

namespace knotchar {
namespace {

const double kPi = std::numbers::pi;
const Complex I(0.0, 1.0);

void ExpectMatNear(const Mat2& expected, const Mat2& actual, double tol) {
  EXPECT_LE(max_abs_diff(expected, actual), tol) << "expected [[" << expected.a << ", " << expected.b
                                                 << "], [" << expected.c << ", " << expected.d
                                                 << "]] got [[" << actual.a << ", " << actual.b
                                                 << "], [" << actual.c << ", " << actual.d << "]]";
}

// Projective equality of two vectors.
bool SameLine(const Vec2& v, const Vec2& w, double tol = 1e-10) {
  return std::abs(bracket(normalized(v), normalized(w))) <= tol;
}

TEST(Mat2Test, Multiply) {
  ExpectMatNear(Mat2::identity(), Mat2::identity() * Mat2::identity(), 0.0);
  ExpectMatNear(Mat2::diag(-1.0, -1.0), Mat2::diag(I, -I) * Mat2::diag(I, -I), 0.0);
  const Mat2 m{1.0, 2.0, 3.0, 4.0};
  const Mat2 n{5.0, 6.0, 7.0, 8.0};
  ExpectMatNear({19.0, 22.0, 43.0, 50.0}, m * n, 0.0);
}

TEST(Mat2Test, TraceAndDet) {
  EXPECT_EQ(Mat2::identity().trace(), Complex(2.0));
  const Complex t(0.3, 1.7);
  EXPECT_LE(std::abs(Mat2::diag(t, 1.0 / t).trace() - (t + 1.0 / t)), 1e-15);
  EXPECT_EQ(Mat2::diag(I, -I).det(), Complex(1.0));
}

TEST(UniMatTest, RejectsNonUnimodular) {
  EXPECT_THROW(UniMat(Mat2::diag(2.0, 2.0)), Error);
  EXPECT_NO_THROW(UniMat(Mat2::diag(2.0, 0.5)));
}

TEST(UniMatTest, Inverse) {
  ExpectMatNear(Mat2::identity(), inverse(UniMat()).mat(), 0.0);
  const Complex t(0.6, -0.8);
  ExpectMatNear(Mat2::diag(1.0 / t, t), inverse(UniMat(Mat2::diag(t, 1.0 / t))).mat(), 1e-15);
  ExpectMatNear({1.0, -1.0, 0.0, 1.0}, inverse(UniMat({1.0, 1.0, 0.0, 1.0})).mat(), 0.0);
}

TEST(PowerTest, Examples) {
  ExpectMatNear(Mat2::identity(), power(Mat2{1.0, 2.0, 3.0, 4.0}, 0), 0.0);
  ExpectMatNear(Mat2::scalar(-1.0), power(Mat2::diag(I, -I), 2), 0.0);
  for (long long m = 1; m <= 12; ++m) {
    ExpectMatNear({1.0, static_cast<double>(m), 0.0, 1.0}, power(Mat2{1.0, 1.0, 0.0, 1.0}, m), 0.0);
  }
  const Complex z = std::polar(1.0, kPi / 6.0);
  ExpectMatNear(Mat2::scalar(-1.0), power(Mat2::diag(z, std::conj(z)), 6), 1e-14);
}

TEST(PowerTest, NegativeExponentUsesInverse) {
  const UniMat u({1.0, 1.0, 0.0, 1.0});
  ExpectMatNear({1.0, -3.0, 0.0, 1.0}, power(u, -3).mat(), 0.0);
  EXPECT_THROW(power(Mat2::identity(), -1), Error);
}

TEST(PowerTest, ExponentsAddUp) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> exponent(0, 16);
  for (int trial = 0; trial < 200; ++trial) {
    const UniMat m = random_unimodular(rng);
    const long long e1 = exponent(rng);
    const long long e2 = exponent(rng);
    const Mat2 lhs = power(m.mat(), e1) * power(m.mat(), e2);
    const Mat2 rhs = power(m.mat(), e1 + e2);
    // Relative to the size of the product.
    EXPECT_LE(max_abs_diff(lhs, rhs) / std::max(1.0, max_abs(rhs)), 1e-8);
  }
}

TEST(IpowTest, MatchesRepeatedProduct) {
  const Complex z(0.9, 0.4);
  Complex acc = 1.0;
  for (long long e = 0; e <= 20; ++e) {
    EXPECT_LE(std::abs(ipow(z, e) - acc), 1e-13 * std::abs(acc));
    EXPECT_LE(std::abs(ipow(z, -e) * acc - 1.0), 1e-13);
    acc *= z;
  }
}

TEST(ConjugateTest, IdentityAndSwap) {
  const Mat2 m{1.0, 2.0, 3.0, 7.0};
  ExpectMatNear(m, conjugate(m, UniMat()), 0.0);
  const Complex lambda = std::polar(1.0, 0.7);
  const UniMat swap({0.0, 1.0, -1.0, 0.0});
  ExpectMatNear(Mat2::diag(1.0 / lambda, lambda), conjugate(Mat2::diag(lambda, 1.0 / lambda), swap),
                1e-15);
}

TEST(ConjugateTest, TracePreserved) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const UniMat m = random_unimodular(rng);
    const UniMat p = random_unimodular(rng);
    const Mat2 c = conjugate(m, p);
    EXPECT_LE(std::abs(c.trace() - m.mat().trace()) / std::max(1.0, max_abs(c)), 1e-10);
  }
}

TEST(EigenTest, Identity) {
  const EigenResult e = eigen(UniMat());
  ASSERT_TRUE(std::holds_alternative<EigenScalar>(e));
  EXPECT_EQ(std::get<EigenScalar>(e).sign, 1);
  const EigenResult neg = eigen(UniMat(Mat2::scalar(-1.0)));
  ASSERT_TRUE(std::holds_alternative<EigenScalar>(neg));
  EXPECT_EQ(std::get<EigenScalar>(neg).sign, -1);
}

TEST(EigenTest, Unipotent) {
  const EigenResult e = eigen(UniMat({1.0, 1.0, 0.0, 1.0}));
  ASSERT_TRUE(std::holds_alternative<EigenNonDiagonalizable>(e));
  const auto& nd = std::get<EigenNonDiagonalizable>(e);
  EXPECT_EQ(nd.sign, 1);
  EXPECT_TRUE(SameLine(nd.v, {1.0, 0.0}));

  const EigenResult neg = eigen(UniMat({-1.0, 0.0, 5.0, -1.0}));
  ASSERT_TRUE(std::holds_alternative<EigenNonDiagonalizable>(neg));
  EXPECT_EQ(std::get<EigenNonDiagonalizable>(neg).sign, -1);
  EXPECT_TRUE(SameLine(std::get<EigenNonDiagonalizable>(neg).v, {0.0, 1.0}));
}

TEST(EigenTest, DiagonalRootOfUnity) {
  const Complex lambda = std::polar(1.0, kPi / 3.0);
  const EigenResult e = eigen(UniMat(Mat2::diag(lambda, std::conj(lambda))));
  ASSERT_TRUE(std::holds_alternative<EigenDistinct>(e));
  const auto& d = std::get<EigenDistinct>(e);
  EXPECT_LE(std::abs(d.lambda - lambda), 1e-15);
  EXPECT_LE(std::abs(d.lambda_inv - std::conj(lambda)), 1e-15);
  EXPECT_TRUE(SameLine(d.v1, {1.0, 0.0}));
  EXPECT_TRUE(SameLine(d.v2, {0.0, 1.0}));
}

TEST(EigenTest, ReconstructsRandomMatrices) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const UniMat m = random_unimodular(rng);
    const EigenResult e = eigen(m);
    ASSERT_TRUE(std::holds_alternative<EigenDistinct>(e));
    const auto& d = std::get<EigenDistinct>(e);
    EXPECT_LE(std::abs(d.lambda * d.lambda_inv - 1.0), 1e-12);
    // P diag P^-1 with P = [v1 v2], det P = bracket(v1, v2).
    const Mat2 p{d.v1.x, d.v2.x, d.v1.y, d.v2.y};
    const Complex det_p = bracket(d.v1, d.v2);
    const Mat2 p_inv = (1.0 / det_p) * Mat2{p.d, -p.b, -p.c, p.a};
    const Mat2 rebuilt = p * Mat2::diag(d.lambda, d.lambda_inv) * p_inv;
    EXPECT_LE(max_abs_diff(rebuilt, m.mat()) / std::max(1.0, max_abs(m.mat())), 1e-8);
  }
}

TEST(BracketTest, Examples) {
  EXPECT_EQ(bracket({1.0, 0.0}, {0.0, 1.0}), Complex(1.0));
  const Vec2 v{Complex(0.3, 2.0), Complex(-1.0, 0.5)};
  EXPECT_EQ(bracket(v, v), Complex(0.0));
  const Complex r(0.25, 0.5);
  EXPECT_LE(std::abs(bracket({r - 1.0, r}, {0.0, 1.0}) - (r - 1.0)), 1e-15);
}

TEST(BracketTest, Antisymmetric) {
  std::mt19937_64 rng(9);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 200; ++trial) {
    const Vec2 v{{g(rng), g(rng)}, {g(rng), g(rng)}};
    const Vec2 w{{g(rng), g(rng)}, {g(rng), g(rng)}};
    EXPECT_EQ(bracket(v, w), -bracket(w, v));
  }
}

TEST(RandomUnimodularTest, DeterministicForSeed) {
  std::mt19937_64 a(42);
  std::mt19937_64 b(42);
  EXPECT_EQ(random_unimodular(a), random_unimodular(b));
  EXPECT_EQ(random_unimodular(a), random_unimodular(b));
}

TEST(RandomUnimodularTest, AllSamplesUnimodular) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 1000; ++i) {
    const UniMat m = random_unimodular(rng);
    EXPECT_LE(std::abs(m.mat().det() - 1.0), 1e-12);
    EXPECT_GE(std::abs(m.mat().a), 1e-6);
  }
}

}  // namespace
}  // namespace knotchar

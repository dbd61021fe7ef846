#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numeric>
#include <numbers>
#include <random>
#include <set>

#include "knotchar/error.hpp"
#include "knotchar/modular.hpp"

namespace knotchar {
namespace {

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidInput;
}

std::vector<KnotType> CoprimePairs(std::int64_t lo, std::int64_t hi) {
  std::vector<KnotType> out;
  for (std::int64_t m = lo; m <= hi; ++m) {
    for (std::int64_t n = lo; n <= hi; ++n) {
      if (std::gcd(m, n) == 1) out.push_back(validate_knot(m, n));
    }
  }
  return out;
}

TEST(ValidateKnotTest, Examples) {
  EXPECT_EQ(validate_knot(2, 3).m(), 2);
  EXPECT_EQ(validate_knot(2, 3).n(), 3);
  EXPECT_EQ(validate_knot(1, 5).n(), 5);
  EXPECT_EQ(CodeOf([] { validate_knot(4, 6); }), ErrorCode::NotCoprime);
  EXPECT_EQ(CodeOf([] { validate_knot(0, 3); }), ErrorCode::NonPositive);
  EXPECT_EQ(CodeOf([] { validate_knot(2, -3); }), ErrorCode::NonPositive);
  EXPECT_EQ(CodeOf([] { validate_knot(2, 1'000'001); }), ErrorCode::TooLarge);
}

TEST(ModInverseTest, Examples) {
  EXPECT_EQ(mod_inverse(3, 7), 5);
  for (std::int64_t k = 1; k < 20; ++k) EXPECT_EQ(mod_inverse(1, k + 1), 1);
  EXPECT_EQ(CodeOf([] { mod_inverse(2, 4); }), ErrorCode::NotInvertible);
  EXPECT_EQ(mod_inverse(-3, 7), 2);
}

TEST(ModInverseTest, BruteForce) {
  for (std::int64_t mod = 2; mod <= 40; ++mod) {
    for (std::int64_t a = 1; a < mod; ++a) {
      if (std::gcd(a, mod) != 1) continue;
      std::int64_t expected = 0;
      while ((a * expected) % mod != 1) ++expected;
      EXPECT_EQ(mod_inverse(a, mod), expected);
    }
  }
}

TEST(CrtTest, Examples) {
  EXPECT_EQ(crt(1, 4, 1, 6), 1);
  EXPECT_EQ(crt(1, 4, 5, 6), 5);
  EXPECT_EQ(CodeOf([] { crt(0, 2, 1, 2); }), ErrorCode::Inconsistent);
}

TEST(CrtTest, ReducesToBothResidues) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> modulus(1, 500);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t m1 = modulus(rng);
    const std::int64_t m2 = modulus(rng);
    const std::int64_t x0 = std::uniform_int_distribution<std::int64_t>(0, 1'000'000)(rng);
    const std::int64_t x = crt(x0 % m1, m1, x0 % m2, m2);
    const std::int64_t lcm = std::lcm(m1, m2);
    EXPECT_GE(x, 0);
    EXPECT_LT(x, lcm);
    EXPECT_EQ(x % m1, x0 % m1);
    EXPECT_EQ(x % m2, x0 % m2);
    EXPECT_EQ(x, x0 % lcm);
  }
}

TEST(BezoutTest, MinimalU) {
  EXPECT_EQ(bezout_pair(validate_knot(2, 3)), (std::pair<std::int64_t, std::int64_t>{1, -1}));
  for (const KnotType& kt : CoprimePairs(1, 15)) {
    const auto [u, v] = bezout_pair(kt);
    EXPECT_EQ(u * kt.n() + v * kt.m(), 1);
    EXPECT_LE(2 * std::llabs(u), kt.m());
    if (2 * std::llabs(u) == kt.m()) EXPECT_GT(u, 0);
  }
}

TEST(EnumerateComponentsTest, Examples) {
  using C = ComponentId;
  EXPECT_EQ(enumerate_components(validate_knot(2, 3)), (std::vector<C>{C::red(), C::irr(1, 1)}));
  EXPECT_EQ(enumerate_components(validate_knot(3, 5)),
            (std::vector<C>{C::red(), C::irr(1, 1), C::irr(1, 3), C::irr(2, 2), C::irr(2, 4)}));
  EXPECT_EQ(enumerate_components(validate_knot(1, 5)), (std::vector<C>{C::red()}));
}

TEST(EnumerateComponentsTest, CountFormula) {
  for (const KnotType& kt : CoprimePairs(1, 12)) {
    const auto comps = enumerate_components(kt);
    EXPECT_EQ(static_cast<std::int64_t>(comps.size()) - 1, (kt.m() - 1) * (kt.n() - 1) / 2);
    for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_NO_THROW(validate_component(kt, comps[i]));
  }
}

TEST(ValidateComponentTest, RejectsBadIndices) {
  const KnotType kt = validate_knot(3, 5);
  EXPECT_EQ(CodeOf([&] { validate_component(kt, ComponentId::irr(1, 2)); }),
            ErrorCode::InvalidComponent);
  EXPECT_EQ(CodeOf([&] { validate_component(kt, ComponentId::irr(3, 1)); }),
            ErrorCode::InvalidComponent);
  EXPECT_EQ(CodeOf([&] { validate_component(kt, ComponentId::red()); }),
            ErrorCode::InvalidComponent);
}

// Scans l in (0, 2mn) for exp(i pi l / mn)^n = lambda and ^m = mu^sign,
// comparing complex numbers rather than residues.
std::int64_t ScanEndpoint(const KnotType& kt, const ComponentId& c, int sign) {
  const double pi = std::numbers::pi;
  const std::complex<double> lambda = std::polar(1.0, pi * c.k / kt.m());
  const std::complex<double> mu = std::polar(1.0, sign * pi * c.kp / kt.n());
  std::int64_t found = -1;
  for (std::int64_t l = 1; l < 2 * kt.m() * kt.n(); ++l) {
    const double angle = pi * l / (kt.m() * kt.n());
    if (std::abs(std::polar(1.0, angle * kt.n()) - lambda) < 1e-9 &&
        std::abs(std::polar(1.0, angle * kt.m()) - mu) < 1e-9) {
      EXPECT_EQ(found, -1) << "solution is not unique";
      found = l;
    }
  }
  return found;
}

TEST(IntersectionIndicesTest, Trefoil) {
  const KnotType kt = validate_knot(2, 3);
  const EndpointIndices idx = intersection_indices(kt, ComponentId::irr(1, 1));
  EXPECT_EQ(idx.l1, (IntersectionIndex{1, 1}));
  EXPECT_EQ(idx.l0, (IntersectionIndex{5, 5}));
}

TEST(IntersectionIndicesTest, MatchesBruteForceScan) {
  for (const KnotType& kt : CoprimePairs(1, 12)) {
    for (const ComponentId& c : enumerate_components(kt)) {
      if (c.is_red()) continue;
      const EndpointIndices idx = intersection_indices(kt, c);
      EXPECT_EQ(idx.l1.raw, ScanEndpoint(kt, c, +1));
      EXPECT_EQ(idx.l0.raw, ScanEndpoint(kt, c, -1));
      EXPECT_NE(idx.l0.folded, idx.l1.folded);
      for (const IntersectionIndex& i : {idx.l0, idx.l1}) {
        EXPECT_EQ(i.folded, std::min(i.raw, 2 * kt.m() * kt.n() - i.raw));
        EXPECT_NE(i.folded % kt.m(), 0);
        EXPECT_NE(i.folded % kt.n(), 0);
      }
    }
  }
}

TEST(IntersectionIndicesTest, FoldedIndicesCoverAdmissibleSet) {
  for (const KnotType& kt : CoprimePairs(1, 12)) {
    std::multiset<std::int64_t> folded;
    for (const ComponentId& c : enumerate_components(kt)) {
      if (c.is_red()) continue;
      const EndpointIndices idx = intersection_indices(kt, c);
      folded.insert(idx.l0.folded);
      folded.insert(idx.l1.folded);
    }
    std::multiset<std::int64_t> admissible;
    for (std::int64_t l = 1; l < kt.m() * kt.n(); ++l) {
      if (l % kt.m() != 0 && l % kt.n() != 0) admissible.insert(l);
    }
    EXPECT_EQ(folded, admissible) << "(" << kt.m() << "," << kt.n() << ")";
    EXPECT_EQ(static_cast<std::int64_t>(folded.size()), (kt.m() - 1) * (kt.n() - 1));
  }
}

}  // namespace
}  // namespace knotchar

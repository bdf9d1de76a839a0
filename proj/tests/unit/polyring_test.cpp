#include <gtest/gtest.h>

#include <random>

#include "sectorlab/polyring.hpp"
#include "support.hpp"

using namespace sectorlab::poly;
using sectorlab::testutil::random_polynomial;
using sectorlab::testutil::random_rational;

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(4), std::invalid_argument);
  EXPECT_THROW(PrimeField(1), std::invalid_argument);
  EXPECT_THROW(PrimeField(65537), std::invalid_argument);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, InverseAgreesWithSearch) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 13u}) {
    PrimeField f(q);
    for (Residue a = 1; a < q; ++a) {
      Residue found = 0;
      for (Residue b = 1; b < q; ++b)
        if (a * b % q == 1) found = b;
      EXPECT_EQ(f.inv(a), found);
    }
  }
}

TEST(Polynomial, ValuationAtInfinityExamples) {
  PrimeField f(3);
  EXPECT_EQ(omega_infty(parse_rational(f, "t^2 + 1")), -2);
  EXPECT_EQ(omega_infty(parse_rational(f, "1/t")), 1);
  EXPECT_EQ(omega_infty(parse_rational(f, "(t + 2)/(t^3 + t)")), 2);
  EXPECT_EQ(omega_infty(RationalFunction::constant(f, 2)), 0);
  EXPECT_TRUE(in_valuation_ring(parse_rational(f, "(t^2 + 1)/(2*t^2)")));
  EXPECT_FALSE(in_valuation_ring(parse_rational(f, "t")));
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {2u, 3u, 7u}) {
    PrimeField f(q);
    for (int k = 0; k < 200; ++k) {
      auto a = random_polynomial(f, rng, 7), b = random_polynomial(f, rng, 4);
      if (b.is_zero()) continue;
      auto [quo, rem] = poly_divmod(a, b);
      EXPECT_EQ(quo * b + rem, a);
      EXPECT_LT(rem.degree(), b.degree());
    }
  }
}

TEST(Polynomial, GcdDividesAndIsMonic) {
  std::mt19937_64 rng(2);
  PrimeField f(5);
  for (int k = 0; k < 200; ++k) {
    auto c = random_polynomial(f, rng, 2);
    auto a = random_polynomial(f, rng, 4) * c, b = random_polynomial(f, rng, 4) * c;
    auto g = poly_gcd(a, b);
    if (a.is_zero() && b.is_zero()) {
      EXPECT_TRUE(g.is_zero());
      continue;
    }
    EXPECT_EQ(g.leading(), 1u);
    EXPECT_TRUE(poly_divmod(a, g).second.is_zero());
    EXPECT_TRUE(poly_divmod(b, g).second.is_zero());
    if (!c.is_zero()) EXPECT_TRUE(poly_divmod(g, c.monic()).second.is_zero());
  }
}

TEST(Polynomial, ParseRoundTrip) {
  std::mt19937_64 rng(3);
  PrimeField f(7);
  for (int k = 0; k < 100; ++k) {
    auto p = random_polynomial(f, rng, 6);
    EXPECT_EQ(parse_polynomial(f, p.to_string()), p);
  }
  EXPECT_EQ(parse_polynomial(f, "3*t^2 - t + 1"), Polynomial(f, {1, -1, 3}));
}

TEST(RationalFunction, FieldAxiomsOnRandomElements) {
  std::mt19937_64 rng(4);
  for (std::uint32_t q : {2u, 3u, 5u}) {
    PrimeField f(q);
    for (int k = 0; k < 150; ++k) {
      auto a = random_rational(f, rng, 3), b = random_rational(f, rng, 3), c = random_rational(f, rng, 3);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_TRUE((a - a).is_zero());
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
      EXPECT_TRUE(a.denominator().leading() == 1);
      EXPECT_TRUE(poly_gcd(a.numerator(), a.denominator()).is_one() || a.is_zero());
    }
  }
}

TEST(RationalFunction, ValuationIsMultiplicativeAndUltrametric) {
  std::mt19937_64 rng(5);
  PrimeField f(3);
  for (int k = 0; k < 300; ++k) {
    auto a = random_rational(f, rng, 4), b = random_rational(f, rng, 4);
    if (a.is_zero() || b.is_zero()) continue;
    EXPECT_EQ(omega_infty(a * b), omega_infty(a) + omega_infty(b));
    if (!(a + b).is_zero()) EXPECT_GE(omega_infty(a + b), std::min(omega_infty(a), omega_infty(b)));
  }
}

TEST(RationalFunction, ParseForms) {
  PrimeField f(5);
  auto r = parse_rational(f, "(t^2 - 1)/(t - 1)");
  EXPECT_TRUE(r.is_polynomial());
  EXPECT_EQ(r.numerator(), Polynomial(f, {1, 1}));
  EXPECT_THROW(parse_rational(f, "1/0"), std::domain_error);
}

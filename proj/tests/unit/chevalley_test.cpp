#include <gtest/gtest.h>

#include <random>

#include "sectorlab/chevalley.hpp"
#include "support.hpp"

using namespace sectorlab;
using namespace sectorlab::poly;

namespace {

std::size_t sl_order(int n, std::size_t q) {
  std::size_t gl = 1, qn = 1;
  for (int k = 0; k < n; ++k) qn *= q;
  for (std::size_t qk = 1; qk < qn; qk *= q) gl *= qn - qk;
  return gl / (q - 1);
}

std::size_t factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Chevalley, SteinbergCommutatorRelation) {
  std::mt19937_64 rng(11);
  PrimeField f(3);
  for (int k = 0; k < 50; ++k) {
    auto a = testutil::random_rational(f, rng, 2), b = testutil::random_rational(f, rng, 2);
    auto c = chevalley::commutator(chevalley::root_element(0, 1, a, 3), chevalley::root_element(1, 2, b, 3));
    EXPECT_EQ(c, chevalley::root_element(0, 2, a * b, 3));
    auto d = chevalley::commutator(chevalley::root_element(0, 1, a, 3), chevalley::root_element(0, 2, b, 3));
    EXPECT_TRUE(d.is_identity());
  }
}

TEST(Chevalley, GroupElementRejectsNonSpecialMatrices) {
  PrimeField f(5);
  RatMatrix m = RatMatrix::identity(f, 2);
  m(0, 0) = RationalFunction::constant(f, 2);
  EXPECT_THROW(chevalley::GroupElement{m}, std::invalid_argument);
}

TEST(Chevalley, InverseAndAssociativity) {
  std::mt19937_64 rng(12);
  PrimeField f(2);
  for (int k = 0; k < 30; ++k) {
    auto g = chevalley::GroupElement(to_rational(testutil::random_sl(f, 3, rng, 6, 2)));
    auto h = chevalley::GroupElement(to_rational(testutil::random_sl(f, 3, rng, 6, 2)));
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_EQ((g * h).inverse(), h.inverse() * g.inverse());
  }
}

TEST(Chevalley, ElementaryGeneratorCount) {
  for (auto [n, q, d] : {std::tuple{2, 2u, 3}, std::tuple{3, 3u, 1}, std::tuple{3, 2u, 2}}) {
    PrimeField f(q);
    std::size_t qd = 1;
    for (int k = 0; k <= d; ++k) qd *= q;
    EXPECT_EQ(chevalley::elementary_generators(n, f, d).size(), std::size_t(n * (n - 1)) * (qd - 1));
  }
}

TEST(Chevalley, SpecialLinearEnumerationHasTheRightOrder) {
  EXPECT_EQ(chevalley::enumerate_special_linear(2, PrimeField(2)).size(), sl_order(2, 2));
  EXPECT_EQ(chevalley::enumerate_special_linear(2, PrimeField(5)).size(), sl_order(2, 5));
  EXPECT_EQ(chevalley::enumerate_special_linear(3, PrimeField(2)).size(), sl_order(3, 2));
}

TEST(Chevalley, TorusWeightsAreRootPairings) {
  PrimeField f(3);
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      roots::Coweight lambda{{a, b, -a - b}};
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          if (i != j) EXPECT_EQ(chevalley::torus_conjugation_weight(f, lambda, i, j), lambda.exponents[i] - lambda.exponents[j]);
    }
}

TEST(Chevalley, CoweightTorusConjugatesRootElements) {
  PrimeField f(7);
  FieldElement a(f, 3);
  roots::Coweight lambda{{2, -1, -1}};
  auto h = to_rational(chevalley::coweight_torus(a, lambda));
  auto e = chevalley::root_element(0, 1, RationalFunction::constant(f, 1), 3);
  auto hg = chevalley::GroupElement(h);
  auto conj = hg * e * hg.inverse();
  EXPECT_EQ(conj.matrix()(0, 1), RationalFunction::constant(f, a.pow(3).value()));
  EXPECT_THROW(chevalley::coweight_torus(a, roots::Coweight{{1, 0, 0}}), std::invalid_argument);
}

TEST(Chevalley, BnAxiomsHoldForSphericalSystems) {
  for (auto [n, q] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{3, 2u}}) {
    auto rep = chevalley::check_bn_axioms(chevalley::spherical_tits_system(n, PrimeField(q)));
    EXPECT_TRUE(rep.pass) << rep.label;
    EXPECT_EQ(rep.group_order, sl_order(n, q));
    EXPECT_EQ(rep.weyl_order, factorial(n));
    EXPECT_TRUE(rep.structural_failures.empty());
  }
}

TEST(Chevalley, DegenerateBorelFailsTheSecondAxiom) {
  auto rep = chevalley::check_bn_axioms(chevalley::degenerate_tits_system(2, PrimeField(2)));
  EXPECT_FALSE(rep.pass);
  ASSERT_FALSE(rep.bn2.empty());
  for (bool b : rep.bn2) EXPECT_FALSE(b);
}

TEST(Chevalley, BnCheckIsWorkerIndependent) {
  auto data = chevalley::spherical_tits_system(3, PrimeField(2));
  auto a = chevalley::check_bn_axioms(data, 1), b = chevalley::check_bn_axioms(data, 4);
  EXPECT_EQ(a.bn2, b.bn2);
  ASSERT_EQ(a.bn1.size(), b.bn1.size());
  for (std::size_t k = 0; k < a.bn1.size(); ++k) EXPECT_EQ(a.bn1[k].holds, b.bn1[k].holds);
}

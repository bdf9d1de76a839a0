#include <gtest/gtest.h>

#include <algorithm>

#include "sectorlab/building.hpp"
#include "sectorlab/chevalley.hpp"
#include "sectorlab/sector.hpp"
#include "sectorlab/stabilizers.hpp"
#include "support.hpp"

using namespace sectorlab;
using namespace sectorlab::stabilizers;
using poly::PrimeField;
using roots::Coweight;

namespace {

// Exhaustive oracle: every matrix with entries of degree <= d and determinant 1
// that fixes every vertex of the simplex under the building action.
std::vector<PolyMatrix> fixing_matrices(const building::BuildingSimplex& s, int n, PrimeField f, int d) {
  const auto polys = testutil::all_polynomials(f, d);
  const auto one = poly::Polynomial::constant(f, 1);
  std::vector<PolyMatrix> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(n) * n, 0);
  PolyMatrix m(f, n);
  while (true) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = polys[idx[i * n + j]];
    if (m.determinant() == one) {
      bool fixes = true;
      for (const auto& v : s.vertices) fixes = fixes && building::act(m, v) == v;
      if (fixes) out.push_back(m);
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == polys.size()) idx[k++] = 0;
    if (k == idx.size()) break;
  }
  std::sort(out.begin(), out.end(), groups::matrix_less);
  return out;
}

std::vector<PolyMatrix> degree_at_most(const FiniteMatrixGroup& g, int d) {
  std::vector<PolyMatrix> out;
  for (const auto& m : g.sorted_elements())
    if (max_degree(m) <= d) out.push_back(m);
  return out;
}

void expect_oracle_agreement(int n, std::uint32_t q, int r, int d) {
  PrimeField f(q);
  for (const auto& s : sector::sector_simplices(n, r)) {
    auto desc = sector::predict_stabilizer(s);
    auto gamma = realize_stabilizer(desc, f);
    EXPECT_EQ(degree_at_most(gamma, d), fixing_matrices(sector::to_building(s, f), n, f, d)) << s.to_string();
  }
}

}  // namespace

TEST(StabilizerOracle, RankOneOverF2) { expect_oracle_agreement(2, 2, 4, 4); }
TEST(StabilizerOracle, RankOneOverF3) { expect_oracle_agreement(2, 3, 3, 2); }
TEST(StabilizerOracle, RankTwoOverF2) { expect_oracle_agreement(3, 2, 2, 1); }

TEST(Stabilizers, RankOneVertexOrders) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    PrimeField f(q);
    for (int m = 1; m <= 3; ++m) {
      auto g = realize_stabilizer(sector::predict_stabilizer(Coweight{{m, 0}}), f);
      std::size_t expected = q - 1;
      for (int k = 0; k <= m; ++k) expected *= q;
      EXPECT_EQ(g.order(), expected);
    }
  }
}

TEST(Stabilizers, BruteSearchMatchesRealization) {
  for (auto [n, q, r] : {std::tuple{2, 2u, 3}, std::tuple{2, 3u, 2}, std::tuple{3, 2u, 1}}) {
    PrimeField f(q);
    for (const auto& s : sector::sector_simplices(n, r)) {
      BruteOptions o;
      o.search_degree = r;
      auto brute = brute_stabilizer(sector::to_building(s, f), o);
      EXPECT_FALSE(brute.lower_bound_only);
      EXPECT_TRUE(brute.group.same_elements(realize_stabilizer(sector::predict_stabilizer(s), f))) << s.to_string();
    }
  }
}

TEST(Stabilizers, ExtensionStructure) {
  for (auto [n, q, r] : {std::tuple{2, 3u, 3}, std::tuple{3, 2u, 2}}) {
    PrimeField f(q);
    for (const auto& s : sector::sector_simplices(n, r)) {
      auto desc = sector::predict_stabilizer(s);
      auto gamma = realize_stabilizer(desc, f);
      auto rep = extension_check(gamma, desc);
      EXPECT_TRUE(rep.ok()) << s.to_string();
      EXPECT_EQ(rep.gamma_order, rep.unipotent_order * rep.levi_order);
      EXPECT_EQ(rep.unipotent_order, rep.predicted_unipotent_order);
      const auto levi = levi_part(gamma, desc);
      for (const auto& g : levi.elements()) EXPECT_LE(max_degree(g), 0);
    }
  }
}

TEST(Stabilizers, LeviProjectionIsAHomomorphism) {
  PrimeField f(2);
  sector::SectorSimplex s{{Coweight{{1, 1, 0}}, Coweight{{2, 1, 0}}}};
  auto desc = sector::predict_stabilizer(s);
  auto gamma = realize_stabilizer(desc, f);
  const auto& el = gamma.elements();
  for (std::size_t a = 0; a < el.size(); a += 7)
    for (std::size_t b = 0; b < el.size(); b += 5)
      EXPECT_EQ(levi_projection(el[a] * el[b], desc), levi_projection(el[a], desc) * levi_projection(el[b], desc));
}

TEST(Stabilizers, LowerCentralSeries) {
  PrimeField f(2);
  auto borel = lower_central_series(unipotent_radical(3, f, {0, 1}));
  EXPECT_EQ(borel.length, 2);
  EXPECT_EQ(borel.orders, (std::vector<std::size_t>{8, 2, 1}));
  for (int n : {3, 4})
    for (int k = 0; k + 1 < n; ++k) EXPECT_EQ(lower_central_series(unipotent_radical(n, f, {k})).length, 1);
  EXPECT_EQ(lower_central_series(unipotent_radical(4, f, {0, 1, 2})).length, 3);
}

TEST(Stabilizers, AbelianInvariants) {
  auto sl2 = [](std::uint32_t q) {
    PrimeField f(q);
    auto els = chevalley::enumerate_special_linear(2, f);
    return FiniteMatrixGroup::generate(f, 2, els);
  };
  EXPECT_EQ(abelian_invariants(sl2(2)).invariant_factors, std::vector<std::size_t>{2});
  EXPECT_EQ(abelian_invariants(sl2(3)).invariant_factors, std::vector<std::size_t>{3});
  EXPECT_TRUE(abelian_invariants(sl2(5)).invariant_factors.empty());
  auto heis = unipotent_radical(3, PrimeField(2), {0, 1});
  EXPECT_EQ(abelian_invariants(heis).invariant_factors, (std::vector<std::size_t>{2, 2}));
  // Z/4 x Z/2: one identity, three involutions, four elements of order 4.
  auto z42 = invariants_from_order_counts({{1, 1}, {2, 3}, {4, 4}});
  EXPECT_EQ(z42.invariant_factors, (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(z42.order(), 8u);
  // Z/6 = Z/2 x Z/3.
  EXPECT_EQ(invariants_from_order_counts({{1, 1}, {2, 1}, {3, 2}, {6, 2}}).invariant_factors, std::vector<std::size_t>{6});
}

TEST(Stabilizers, SnWitnesses) {
  auto brute = [](std::uint32_t q, int n) {
    PrimeField f(q);
    std::vector<poly::Residue> t(n, 1);
    while (true) {
      bool ok = true;
      for (unsigned mask = 1; mask < (1u << n) && ok; ++mask) {
        std::uint64_t sum = 0;
        for (int i = 0; i < n; ++i)
          if (mask >> i & 1) sum += t[i];
        ok = sum % q != 0;
      }
      if (ok) return std::optional(t);
      int k = n - 1;
      while (k >= 0 && t[k] == q - 1) t[k--] = 1;
      if (k < 0) return std::optional<std::vector<poly::Residue>>{};
      ++t[k];
    }
  };
  for (auto [q, n] : {std::pair{2u, 2}, std::pair{3u, 2}, std::pair{5u, 2}, std::pair{5u, 3}, std::pair{7u, 3}}) {
    EXPECT_EQ(sn_witness(q, n), brute(q, n)) << q << " " << n;
  }
  EXPECT_FALSE(sn_witness(2, 2).has_value());
  EXPECT_TRUE(is_sn_witness(PrimeField(5), {1, 3}));
  EXPECT_FALSE(is_sn_witness(PrimeField(5), {1, 4}));
}

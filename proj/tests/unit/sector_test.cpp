#include <gtest/gtest.h>

#include <algorithm>

#include "sectorlab/building.hpp"
#include "sectorlab/sector.hpp"

using namespace sectorlab;
using namespace sectorlab::sector;
using roots::Coweight;

namespace {

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(Sector, VertexCountIsABinomial) {
  for (int n = 2; n <= 4; ++n)
    for (int r = 0; r <= 5; ++r) EXPECT_EQ(sector_vertices(n, r).size(), binomial(r + n - 1, n - 1));
}

TEST(Sector, AdjacencyAgreesWithTheBuilding) {
  poly::PrimeField f(2);
  auto vs = sector_vertices(3, 3);
  for (const auto& x : vs)
    for (const auto& y : vs) {
      if (x == y) continue;
      EXPECT_EQ(sector_adjacent(x, y),
                building::adjacent(building::BuildingVertex::from_coweight(f, x),
                                   building::BuildingVertex::from_coweight(f, y)));
    }
}

TEST(Sector, SimplicesAreCliquesOfBoundedSize) {
  for (int n = 2; n <= 4; ++n) {
    for (const auto& s : sector_simplices(n, 3)) {
      EXPECT_LE(s.dimension(), n - 1);
      for (std::size_t i = 0; i < s.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < s.vertices.size(); ++j)
          EXPECT_TRUE(sector_adjacent(s.vertices[i], s.vertices[j]));
    }
  }
  // SL_2: a ray with r + 1 vertices and r edges.
  EXPECT_EQ(sector_simplices(2, 4).size(), 9u);
}

TEST(Sector, RankOneStabilizerPrediction) {
  for (int m = 0; m <= 4; ++m) {
    auto d = predict_stabilizer(Coweight{{m, 0}});
    EXPECT_EQ(d.bound(0, 1), m);
    EXPECT_EQ(d.bound(1, 0), -m);
    EXPECT_EQ(d.unipotent_log_order(), m == 0 ? 0 : m + 1);
    EXPECT_EQ(d.levi_roots().size(), m == 0 ? 2u : 0u);
  }
  SectorSimplex edge{{Coweight{{0, 0}}, Coweight{{1, 0}}}};
  auto e = predict_stabilizer(edge);
  EXPECT_EQ(e.bound(0, 1), 0);
  EXPECT_FALSE(e.allows(1, 0));
  EXPECT_TRUE(e.levi_roots().empty());
}

TEST(Sector, SimplexBoundsAreVertexMinima) {
  for (const auto& s : sector_simplices(3, 3)) {
    auto d = predict_stabilizer(s);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        int m = 1 << 20;
        for (const auto& x : s.vertices) m = std::min(m, x.exponents[i] - x.exponents[j]);
        EXPECT_EQ(d.bound(i, j), m);
      }
  }
}

TEST(Sector, StratumLabelsAndLeviRoots) {
  SectorSimplex v{{Coweight{{2, 2, 0}}}};
  EXPECT_EQ(stratum_label(v).nonvanishing, std::vector<int>{1});
  auto levi = predict_stabilizer(v).levi_roots();
  std::sort(levi.begin(), levi.end());
  std::vector<roots::Root> expected{roots::type_a_root(3, 0, 1), roots::type_a_root(3, 1, 0)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(levi, expected);
  for (const auto& s : sector_simplices(3, 3))
    for (const auto& t : sector_simplices(3, 3))
      if (stratum_label(s) == stratum_label(t))
        EXPECT_EQ(predict_stabilizer(s).levi_roots(), predict_stabilizer(t).levi_roots());
}

TEST(Sector, FitsChecksTheDegreePattern) {
  poly::PrimeField f(2);
  auto d = predict_stabilizer(Coweight{{2, 0}});
  PolyMatrix g = PolyMatrix::identity(f, 2);
  g(0, 1) = poly::Polynomial(f, {1, 0, 1});
  EXPECT_TRUE(d.fits(g));
  g(0, 1) = poly::Polynomial(f, {0, 0, 0, 1});
  EXPECT_FALSE(d.fits(g));
  g = PolyMatrix::identity(f, 2);
  g(1, 0) = poly::Polynomial::constant(f, 1);
  EXPECT_FALSE(d.fits(g));
}

TEST(Sector, SmallDomainChecksPass) {
  for (auto [n, q, r] : {std::tuple{2, 2u, 3}, std::tuple{2, 3u, 2}, std::tuple{3, 2u, 1}}) {
    DomainOptions o;
    o.n = n;
    o.q = q;
    o.r = r;
    o.gen_degree = r + 1;
    auto rep = verify_fundamental_domain(o);
    EXPECT_EQ(rep.status, Status::Pass);
    EXPECT_DOUBLE_EQ(rep.coverage_fraction, 1.0);
    EXPECT_TRUE(rep.duplicates.empty());
    EXPECT_EQ(rep.classes.size(), sector_simplices(n, r).size());
  }
}

TEST(Sector, DomainCheckWithoutEnoughGeneratorsIsNotAPass) {
  DomainOptions o;
  o.n = 2;
  o.q = 2;
  o.r = 3;
  o.gen_degree = 0;
  EXPECT_NE(verify_fundamental_domain(o).status, Status::Pass);
  o.gen_degree = 4;
  o.max_orbit_steps = 10;
  auto rep = verify_fundamental_domain(o);
  EXPECT_TRUE(rep.budget_exhausted);
  EXPECT_EQ(rep.status, Status::Inconclusive);
}

TEST(Sector, DomainCheckIsWorkerIndependent) {
  DomainOptions o;
  o.n = 3;
  o.q = 2;
  o.r = 1;
  o.gen_degree = 2;
  auto a = verify_fundamental_domain(o);
  o.workers = 4;
  auto b = verify_fundamental_domain(o);
  EXPECT_EQ(a.orbit_steps, b.orbit_steps);
  EXPECT_EQ(a.unreached, b.unreached);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t k = 0; k < a.classes.size(); ++k) EXPECT_EQ(a.classes[k].ball_members, b.classes[k].ball_members);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "sectorlab/rootsys.hpp"

using namespace sectorlab::roots;

namespace {

// Roots of D_n as all +-e_i +- e_j, listed independently of the library.
std::set<std::vector<int>> d_roots(int n) {
  std::set<std::vector<int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j)
        for (int a : {1, -1})
          for (int b : {1, -1}) {
            std::vector<int> v(n, 0);
            v[i] = a;
            v[j] = b;
            out.insert(v);
          }
  return out;
}

}  // namespace

TEST(RootSystem, CountsMatchClosedForms) {
  for (int r = 1; r <= 6; ++r) EXPECT_EQ(generate_roots(Family::A, r).roots().size(), std::size_t(r * (r + 1)));
  for (int r = 3; r <= 6; ++r) EXPECT_EQ(generate_roots(Family::D, r).roots().size(), std::size_t(2 * r * (r - 1)));
  EXPECT_THROW(generate_roots(Family::D, 2), std::invalid_argument);
}

TEST(RootSystem, TypeDAgreesWithIndependentList) {
  for (int r = 3; r <= 5; ++r) {
    std::set<std::vector<int>> lib;
    const auto rs = generate_roots(Family::D, r);
    for (const auto& a : rs.roots()) lib.insert(a.coords);
    EXPECT_EQ(lib, d_roots(r));
  }
}

TEST(RootSystem, ReflectionsPermuteRoots) {
  for (auto [fam, r] : {std::pair{Family::A, 3}, std::pair{Family::D, 4}}) {
    auto rs = generate_roots(fam, r);
    for (const auto& a : rs.roots())
      for (const auto& b : rs.roots()) EXPECT_TRUE(rs.contains(rs.reflect(a, b)));
  }
}

TEST(RootSystem, HalfThePositiveRoots) {
  for (auto [fam, r] : {std::pair{Family::A, 4}, std::pair{Family::D, 5}}) {
    auto rs = generate_roots(fam, r);
    std::size_t pos = 0;
    for (const auto& a : rs.roots()) {
      pos += rs.is_positive(a);
      EXPECT_NE(rs.is_positive(a), rs.is_positive(-a));
    }
    EXPECT_EQ(2 * pos, rs.roots().size());
  }
}

TEST(RootSystem, HighestRootAndMultiplicities) {
  auto a = generate_roots(Family::A, 3);
  EXPECT_EQ(highest_root(a).coords, (std::vector<int>{1, 0, 0, -1}));
  for (const auto& s : a.simples()) EXPECT_EQ(multiplicity_in_highest(a, s), 1);

  auto d = generate_roots(Family::D, 5);
  EXPECT_EQ(highest_root(d).coords, (std::vector<int>{1, 1, 0, 0, 0}));
  std::vector<int> m;
  for (const auto& s : d.simples()) m.push_back(multiplicity_in_highest(d, s));
  EXPECT_EQ(m, (std::vector<int>{1, 2, 2, 1, 1}));
}

TEST(RootSystem, PairingWithCoweights) {
  Coweight x{{3, 1, 0}};
  EXPECT_EQ(pairing(type_a_root(3, 0, 1), x), 2);
  EXPECT_EQ(pairing(type_a_root(3, 2, 0), x), -3);
  EXPECT_TRUE(x.is_dominant_normalized());
  EXPECT_FALSE((Coweight{{0, 1, 0}}).is_dominant_normalized());
}

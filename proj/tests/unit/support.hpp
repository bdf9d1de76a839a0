#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sectorlab/matrix.hpp"
#include "sectorlab/polyring.hpp"

namespace sectorlab::testutil {

inline poly::Polynomial random_polynomial(poly::PrimeField f, std::mt19937_64& rng, int max_degree) {
  std::vector<poly::Residue> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : c) x = static_cast<poly::Residue>(rng() % f.modulus());
  return poly::Polynomial(f, c);
}

inline poly::RationalFunction random_rational(poly::PrimeField f, std::mt19937_64& rng, int max_degree) {
  poly::Polynomial den = random_polynomial(f, rng, max_degree);
  while (den.is_zero()) den = random_polynomial(f, rng, max_degree);
  return poly::rat_normalize(random_polynomial(f, rng, max_degree), den);
}

// Every polynomial of degree <= d, in counting order.
inline std::vector<poly::Polynomial> all_polynomials(poly::PrimeField f, int d) {
  std::vector<poly::Polynomial> out;
  std::vector<poly::Residue> c(static_cast<std::size_t>(d) + 1, 0);
  while (true) {
    out.emplace_back(f, c);
    std::size_t k = 0;
    while (k < c.size() && ++c[k] == f.modulus()) c[k++] = 0;
    if (k == c.size()) break;
  }
  return out;
}

// Product of random elementary matrices e_ij(u) with polynomial u, hence in SL_n(F_q[t]).
inline PolyMatrix random_sl(poly::PrimeField f, int n, std::mt19937_64& rng, int steps, int max_degree) {
  PolyMatrix m = PolyMatrix::identity(f, n);
  for (int k = 0; k < steps; ++k) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    PolyMatrix e = PolyMatrix::identity(f, n);
    e(i, j) = random_polynomial(f, rng, max_degree);
    m = m * e;
  }
  return m;
}

}  // namespace sectorlab::testutil

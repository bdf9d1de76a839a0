#pragma once

// The simplicial F_q-algebra n -> F_q[X_0, ..., X_n] / (X_0 + ... + X_n - 1)
// with its face and degeneracy homomorphisms. Elements are stored with X_n
// eliminated, so equality is equality of ordinary polynomials in X_0..X_{n-1}.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sectorlab/polyring.hpp"

namespace sectorlab::simpalg {

inline constexpr int kDefaultDegreeCap = 8;

class SimplexPolynomial {
 public:
  using Monomial = std::vector<int>;  // exponents of X_0..X_{level-1}

  /// Zero at the given level.
  SimplexPolynomial(poly::PrimeField field, int level, int degree_cap = kDefaultDegreeCap);

  static SimplexPolynomial constant(poly::PrimeField field, int level, std::int64_t c,
                                    int degree_cap = kDefaultDegreeCap);
  /// X_j for 0 <= j <= level; X_level is rewritten as 1 - X_0 - ... - X_{level-1}.
  static SimplexPolynomial variable(poly::PrimeField field, int level, int j,
                                    int degree_cap = kDefaultDegreeCap);

  const poly::PrimeField& field() const { return field_; }
  int level() const { return level_; }
  int degree_cap() const { return cap_; }
  const std::map<Monomial, poly::Residue>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;

  /// Adds c * X^m (m of length level).
  void add_term(const Monomial& m, poly::Residue c);

  /// Ring homomorphism X_j -> images[j] for j < level (images share one level).
  SimplexPolynomial substitute(const std::vector<SimplexPolynomial>& images) const;

  std::string to_string() const;

  friend SimplexPolynomial operator+(const SimplexPolynomial& a, const SimplexPolynomial& b);
  friend SimplexPolynomial operator-(const SimplexPolynomial& a, const SimplexPolynomial& b);
  /// Throws BudgetExceeded if the product exceeds the degree cap.
  friend SimplexPolynomial operator*(const SimplexPolynomial& a, const SimplexPolynomial& b);
  friend bool operator==(const SimplexPolynomial& a, const SimplexPolynomial& b) {
    return a.level_ == b.level_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const SimplexPolynomial& o) const;

  poly::PrimeField field_;
  int level_;
  int cap_;
  std::map<Monomial, poly::Residue> terms_;
};

/// d_i: level n -> n - 1 (n >= 1, 0 <= i <= n).
SimplexPolynomial face(int i, const SimplexPolynomial& p);
/// s_i: level n -> n + 1 (0 <= i <= n).
SimplexPolynomial degeneracy(int i, const SimplexPolynomial& p);

/// Random element with up to `max_terms` terms of total degree <= max_degree.
/// Uses only the raw 64-bit output of the generator, so it is portable.
template <typename Rng>
SimplexPolynomial random_simplex_polynomial(poly::PrimeField field, int level, Rng& rng, int max_terms = 6,
                                            int max_degree = 3) {
  SimplexPolynomial p(field, level);
  const int terms = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
  for (int t = 0; t < terms; ++t) {
    SimplexPolynomial::Monomial m(level, 0);
    int budget = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
    while (budget > 0 && level > 0) {
      ++m[rng() % static_cast<std::uint64_t>(level)];
      --budget;
    }
    p.add_term(m, static_cast<poly::Residue>(rng() % field.modulus()));
  }
  return p;
}

struct MapSpec {
  enum class Kind { Face, Degeneracy } kind = Kind::Face;
  int index = 0;
  std::string to_string() const;
};

SimplexPolynomial apply(const MapSpec& map, const SimplexPolynomial& p);

/// Square matrix over the algebra at one level.
struct SimplexMatrix {
  int n = 0;
  std::vector<SimplexPolynomial> entries;  // row-major

  const SimplexPolynomial& operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * n + j]; }
  SimplexPolynomial& operator()(int i, int j) { return entries[static_cast<std::size_t>(i) * n + j]; }
  friend bool operator==(const SimplexMatrix&, const SimplexMatrix&) = default;
};

SimplexMatrix identity_matrix(poly::PrimeField field, int level, int n);
/// e_ij(u) at the level of u.
SimplexMatrix elementary_matrix(int n, int i, int j, const SimplexPolynomial& u);
SimplexMatrix multiply(const SimplexMatrix& a, const SimplexMatrix& b);
/// Leibniz expansion.
SimplexPolynomial determinant(const SimplexMatrix& m);
/// Entrywise application of a face or degeneracy.
SimplexMatrix apply_to_matrix(const MapSpec& map, const SimplexMatrix& m);

struct IdentityFamilyResult {
  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::vector<std::string> counterexamples;  // first few only
};

struct SimplicialReport {
  int n_max = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::uint32_t q = 0;
  std::vector<IdentityFamilyResult> families;  // five identity families, then the determinant check

  bool pass() const;
};

/// Checks the five simplicial identity families on `samples` random elements
/// per source level 0..n_max, and that every face and degeneracy keeps
/// determinant 1 on random products of elementary 2x2 matrices.
SimplicialReport check_simplicial_identities(int n_max, std::size_t samples, std::uint64_t seed,
                                             std::uint32_t q = 3);

}  // namespace sectorlab::simpalg

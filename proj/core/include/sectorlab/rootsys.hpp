#pragma once

// Root systems of type A and D in ambient coordinates, coweights and the
// root/coweight pairing.

#include <string>
#include <vector>

namespace sectorlab::roots {

enum class Family { A, D };

std::string to_string(Family f);
Family parse_family(const std::string& s);

/// Root in ambient e_i coordinates. For A_{n-1}, alpha_ij = e_i - e_j.
struct Root {
  std::vector<int> coords;

  friend bool operator==(const Root&, const Root&) = default;
  friend auto operator<=>(const Root&, const Root&) = default;
  Root operator-() const;
};

/// Integer vector (a_1, ..., a_n); sector vertices use a_1 >= ... >= a_n = 0.
struct Coweight {
  std::vector<int> exponents;

  std::size_t size() const { return exponents.size(); }
  bool is_dominant_normalized() const;
  friend bool operator==(const Coweight&, const Coweight&) = default;
  friend auto operator<=>(const Coweight&, const Coweight&) = default;
};

class RootSystem {
 public:
  Family family() const { return family_; }
  int rank() const { return rank_; }
  /// Dimension of the ambient lattice (rank + 1 for A, rank for D).
  int ambient_dim() const { return ambient_; }
  const std::vector<Root>& roots() const { return roots_; }
  const std::vector<Root>& simples() const { return simples_; }

  bool contains(const Root& r) const;
  /// Index of r among the simple roots, or -1.
  int simple_index(const Root& r) const;
  /// Coefficients of r in the basis of simple roots.
  std::vector<int> simple_coordinates(const Root& r) const;
  bool is_positive(const Root& r) const;
  /// Reflection s_alpha(beta) = beta - <beta, alpha^vee> alpha.
  Root reflect(const Root& alpha, const Root& beta) const;

 private:
  friend RootSystem generate_roots(Family family, int rank);
  Family family_ = Family::A;
  int rank_ = 0;
  int ambient_ = 0;
  std::vector<Root> roots_;
  std::vector<Root> simples_;
};

/// Complete root system; |A_n| = n(n+1), |D_n| = 2n(n-1) (n >= 3).
RootSystem generate_roots(Family family, int rank);

/// The unique root dominating all others coefficientwise in simple coordinates.
Root highest_root(const RootSystem& rs);

/// alpha(x): the ambient dot product; alpha_ij(x) = a_i - a_j in type A.
int pairing(const Root& alpha, const Coweight& x);

/// m(alpha): coefficient of the simple root alpha in the highest root.
int multiplicity_in_highest(const RootSystem& rs, const Root& alpha);

/// Type A_{n-1} root alpha_ij = e_i - e_j with 0-based indices.
Root type_a_root(int n, int i, int j);

}  // namespace sectorlab::roots

#pragma once

// Lattice-class model of the Bruhat-Tits building of SL_n(F_q(t)) for the
// valuation at infinity. With s = 1/t the valuation ring O is F_q[s]
// localized at s, and a vertex is the homothety class of an O-lattice in K^n.
//
// A vertex is stored by the column Hermite form of a basis: lower triangular,
// diagonal s^{a_i}, entry (i, j) below the diagonal a polynomial in s of
// degree < a_i, and the lattice scaled so that it lies in O^n but not in sO^n.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sectorlab/chevalley.hpp"
#include "sectorlab/matrix.hpp"
#include "sectorlab/polyring.hpp"
#include "sectorlab/rootsys.hpp"

namespace sectorlab::building {

class BuildingVertex {
 public:
  /// Builds a vertex from Hermite data; throws if the data is not canonical.
  BuildingVertex(poly::PrimeField field, std::vector<int> exponents,
                 std::vector<std::vector<poly::Residue>> lower);

  /// The standard lattice class O^n (the vertex fixed by SL_n(O)).
  static BuildingVertex standard(poly::PrimeField field, int n);
  /// Diagonal lattice diag(t^{x_1}, ..., t^{x_n}) O^n of a coweight.
  static BuildingVertex from_coweight(poly::PrimeField field, const roots::Coweight& x);

  const poly::PrimeField& field() const { return field_; }
  int size() const { return static_cast<int>(exponents_.size()); }
  const std::vector<int>& exponents() const { return exponents_; }
  /// Coefficients (lowest first, length exponents()[i]) of entry (i, j), i > j.
  const std::vector<poly::Residue>& lower(int i, int j) const;
  bool is_diagonal() const;
  /// sum of exponents mod n.
  int type() const;

  /// Lower-triangular basis matrix over F_q(t) (s^k written as t^{-k}).
  RatMatrix representative() const;

  /// Compact canonical text form, unique per vertex.
  std::string key() const;

  friend bool operator==(const BuildingVertex&, const BuildingVertex&) = default;
  friend auto operator<=>(const BuildingVertex& a, const BuildingVertex& b) {
    if (auto c = a.exponents_ <=> b.exponents_; c != 0) return c;
    return a.lower_ <=> b.lower_;
  }

 private:
  static std::size_t lower_index(int i, int j) {
    return static_cast<std::size_t>(i) * (i - 1) / 2 + j;
  }

  poly::PrimeField field_;
  std::vector<int> exponents_;
  std::vector<std::vector<poly::Residue>> lower_;  // packed, rows i = 1..n-1
};

/// Sorted set of pairwise adjacent vertices.
struct BuildingSimplex {
  std::vector<BuildingVertex> vertices;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  friend bool operator==(const BuildingSimplex&, const BuildingSimplex&) = default;
  friend auto operator<=>(const BuildingSimplex&, const BuildingSimplex&) = default;
};

BuildingSimplex make_simplex(std::vector<BuildingVertex> vertices);

/// Canonical vertex of the lattice spanned by the columns of m.
BuildingVertex canonical_form(const RatMatrix& m);

/// g . v for g in GL_n(F_q(t)).
BuildingVertex act(const chevalley::GroupElement& g, const BuildingVertex& v);
/// g . v for a nonsingular polynomial matrix g (fast path used by the orbit engine).
BuildingVertex act(const PolyMatrix& g, const BuildingVertex& v);
BuildingSimplex act(const PolyMatrix& g, const BuildingSimplex& s);

/// All adjacent vertices: one per proper nonzero subspace of L/sL.
std::vector<BuildingVertex> neighbors(const BuildingVertex& v);
/// Number of proper nonzero subspaces of F_q^n.
std::size_t neighbor_count(int n, std::uint32_t q);

bool adjacent(const BuildingVertex& a, const BuildingVertex& b);

struct BallOptions {
  std::size_t vertex_budget = 200000;
  std::size_t workers = 1;
};

/// Finite window of the building: all vertices within graph distance `radius`
/// of the center, and every simplex spanned by them.
struct Ball {
  BuildingVertex center;
  int radius = 0;
  std::vector<BuildingVertex> vertices;         // sorted by canonical order
  std::vector<int> distance;                    // graph distance to the center
  std::vector<std::vector<int>> adjacency;      // sorted neighbor indices inside the ball
  std::vector<std::vector<int>> simplices;      // sorted index tuples, by dimension then lexicographic

  std::optional<int> index_of(const BuildingVertex& v) const;
  BuildingSimplex simplex(std::size_t k) const;
  std::size_t count_of_dimension(int dim) const;
};

/// Throws BudgetExceeded when the vertex budget is hit.
Ball ball(const BuildingVertex& center, int radius, const BallOptions& options = {});

/// Graphviz rendering of the 1-skeleton.
std::string to_dot(const Ball& b);

}  // namespace sectorlab::building

template <>
struct std::hash<sectorlab::building::BuildingVertex> {
  std::size_t operator()(const sectorlab::building::BuildingVertex& v) const noexcept;
};

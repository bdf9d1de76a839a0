#pragma once

// The sector Q at the standard vertex: simplices spanned by dominant diagonal
// lattice classes, predicted stabilizers from root pairings, stratum labels,
// and an orbit-enumeration check that Q is a fundamental domain for
// SL_n(F_q[t]) on a ball of the building.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sectorlab/building.hpp"
#include "sectorlab/matrix.hpp"
#include "sectorlab/polyring.hpp"
#include "sectorlab/rootsys.hpp"

namespace sectorlab::sector {

/// Simplex of Q; vertices are dominant normalized coweights in sorted order.
struct SectorSimplex {
  std::vector<roots::Coweight> vertices;

  int dimension() const { return static_cast<int>(vertices.size()) - 1; }
  int n() const { return vertices.empty() ? 0 : static_cast<int>(vertices.front().size()); }
  /// Largest a_1 among the vertices (graph distance of the farthest vertex from the origin).
  int reach() const;
  std::string to_string() const;

  friend bool operator==(const SectorSimplex&, const SectorSimplex&) = default;
  friend auto operator<=>(const SectorSimplex&, const SectorSimplex&) = default;
};

/// a_1 >= ... >= a_n = 0 with a_1 <= r, in lexicographic order.
std::vector<roots::Coweight> sector_vertices(int n, int r);

/// Diagonal lattice classes of x and y are adjacent.
bool sector_adjacent(const roots::Coweight& x, const roots::Coweight& y);

/// Every simplex of Q with all vertices at a_1 <= r, by dimension then lexicographic.
std::vector<SectorSimplex> sector_simplices(int n, int r);

building::BuildingSimplex to_building(const SectorSimplex& s, poly::PrimeField field);

/// Degree bounds on matrix entries of the stabilizer of a sector simplex.
/// bound(i, j) = min over vertices x of a_i(x) - a_j(x); a negative bound
/// forces the entry to vanish.
class StabilizerDescription {
 public:
  StabilizerDescription(int n, std::vector<int> bounds);

  int n() const { return n_; }
  int bound(int i, int j) const { return bounds_[static_cast<std::size_t>(i) * n_ + j]; }
  bool allows(int i, int j) const { return bound(i, j) >= 0; }
  /// alpha_ij vanishes on every vertex, i.e. both alpha_ij and alpha_ji have bound 0.
  bool is_levi(int i, int j) const { return i != j && bound(i, j) == 0 && bound(j, i) == 0; }
  std::vector<roots::Root> levi_roots() const;
  /// Root alpha_ij with its bound, for every i != j.
  std::vector<std::pair<roots::Root, int>> root_bounds() const;
  /// log_q of the order of the unipotent part: sum of (bound + 1) over allowed non-Levi roots.
  int unipotent_log_order() const;

  /// Degree pattern test only; the determinant is not checked.
  bool fits(const PolyMatrix& g) const;

  friend bool operator==(const StabilizerDescription&, const StabilizerDescription&) = default;

 private:
  int n_;
  std::vector<int> bounds_;
};

StabilizerDescription predict_stabilizer(const SectorSimplex& sigma);
StabilizerDescription predict_stabilizer(const roots::Coweight& x);

/// Entrywise minimum of two descriptions (stabilizer of a union of vertices).
StabilizerDescription intersect(const StabilizerDescription& a, const StabilizerDescription& b);

struct StratumLabel {
  std::vector<int> nonvanishing;  // indices k of simple roots e_k - e_{k+1}, 0-based

  friend bool operator==(const StratumLabel&, const StratumLabel&) = default;
  friend auto operator<=>(const StratumLabel&, const StratumLabel&) = default;
};

StratumLabel stratum_label(const SectorSimplex& sigma);

enum class Status { Pass, Fail, Inconclusive };
std::string to_string(Status s);

struct DomainOptions {
  int n = 2;
  std::uint32_t q = 2;
  int r = 2;
  int gen_degree = 3;
  std::size_t max_orbit_steps = 50'000'000;
  /// The orbit search may pass through simplices up to r + window_slack from the origin.
  int window_slack = 0;
  std::size_t vertex_budget = 200'000;
  std::size_t workers = 1;
};

struct OrbitClass {
  std::string sector;          // the sector simplex representing the class
  std::size_t ball_members = 0;  // simplices of ball(origin, r) in the class
};

struct DomainReport {
  DomainOptions options;
  int window_radius = 0;
  std::size_t generator_count = 0;
  std::size_t ball_vertices = 0;
  std::vector<std::size_t> ball_simplices_by_dimension;
  std::size_t sector_simplex_count = 0;  // inside the window
  std::size_t orbit_steps = 0;
  std::size_t covered = 0;
  double coverage_fraction = 0.0;
  std::vector<std::string> duplicates;  // classes holding more than one sector simplex
  std::vector<std::string> unreached;   // ball simplices not joined to any sector simplex
  std::vector<OrbitClass> classes;
  bool budget_exhausted = false;
  Status status = Status::Inconclusive;
};

/// Joins each simplex of the window ball(origin, r + slack) to its images under
/// the elementary generators of degree <= gen_degree. Coverage and uniqueness
/// are then read off the classes meeting ball(origin, r). Two sector simplices
/// in one class is a FAIL; unreached simplices or an exhausted step budget give
/// INCONCLUSIVE.
DomainReport verify_fundamental_domain(const DomainOptions& options);

}  // namespace sectorlab::sector

#pragma once

// Stabilizers of sector simplices in SL_n(F_q[t]): the group predicted by
// degree bounds, an independent search driven by the building action, the
// Levi/unipotent extension, central series and abelianization.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sectorlab/building.hpp"
#include "sectorlab/finite_group.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab::stabilizers {

using groups::FiniteMatrixGroup;

/// Every matrix of SL_n(F_q[t]) fitting the degree pattern, generated from the
/// diagonal torus, constant Levi root elements and monomial root elements
/// c t^k (k <= bound). Throws InvariantViolation if a product leaves the
/// pattern or has determinant other than 1.
FiniteMatrixGroup realize_stabilizer(const sector::StabilizerDescription& desc, poly::PrimeField field,
                                     std::size_t budget = groups::kDefaultGroupBudget);

struct BruteOptions {
  int search_degree = 4;
  int search_length = 64;  // maximal word length in the fixing generators
  std::size_t budget = groups::kDefaultGroupBudget;
};

struct BruteResult {
  FiniteMatrixGroup group;
  std::size_t candidates_tested = 0;
  std::size_t fixing_generators = 0;
  /// True when the degree cap or the word-length cap cut the search short.
  bool lower_bound_only = false;
};

/// Candidate generators are all of SL_n(F_q) and every elementary e_ij(u) with
/// deg u <= search_degree; those fixing each vertex of sigma under the
/// building action are closed under products. Every element is re-checked
/// against the action.
BruteResult brute_stabilizer(const building::BuildingSimplex& sigma, const BruteOptions& options = {});

/// Constant term, keeping only entries on Levi roots and the diagonal.
PolyMatrix levi_projection(const PolyMatrix& g, const sector::StabilizerDescription& desc);

struct ExtensionReport {
  std::size_t gamma_order = 0;
  std::size_t unipotent_order = 0;
  std::size_t levi_order = 0;
  std::size_t predicted_unipotent_order = 0;
  bool projection_homomorphism = false;
  bool unipotent_normal = false;
  bool levi_subgroup = false;
  bool orders_factor = false;
  bool splits = false;
  bool torus_stable = false;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks 1 -> U -> Gamma -> L -> 1 with U the kernel of the Levi projection.
ExtensionReport extension_check(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc);

/// Kernel of the Levi projection as an explicit group.
FiniteMatrixGroup unipotent_part(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc);
/// Image of the Levi projection as an explicit group.
FiniteMatrixGroup levi_part(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc);

/// Unipotent radical over F_q of the standard parabolic of SL_n whose radical
/// contains the root groups of the simple roots in `simple_subset`
/// (0-based indices k for e_k - e_{k+1}).
FiniteMatrixGroup unipotent_radical(int n, poly::PrimeField field, const std::vector<int>& simple_subset);

struct CentralSeries {
  std::vector<std::size_t> orders;  // |gamma_1|, |gamma_2|, ..., ending in 1
  int length = 0;                   // first c with gamma_{c+1} trivial
};

/// Lower central series gamma_{k+1} = [U, gamma_k]; throws InvariantViolation
/// if it stalls at a nontrivial subgroup.
CentralSeries lower_central_series(const FiniteMatrixGroup& u);

struct AbelianInvariants {
  std::vector<std::size_t> invariant_factors;  // d_1 | d_2 | ..., all > 1
  std::size_t order() const;
};

/// Invariant factors of G / [G, G].
AbelianInvariants abelian_invariants(const FiniteMatrixGroup& g,
                                     std::size_t budget = groups::kDefaultGroupBudget);

/// Invariant factors of a finite abelian group from the element-order counts:
/// counts[d] = number of elements of order d.
AbelianInvariants invariants_from_order_counts(const std::vector<std::pair<std::size_t, std::size_t>>& counts);

/// Every nonempty subfamily of `units` sums to a nonzero element.
bool is_sn_witness(const poly::PrimeField& field, const std::vector<poly::Residue>& units);

/// Lexicographically first witness among tuples of units, or nullopt if none exists.
std::optional<std::vector<poly::Residue>> sn_witness(std::uint32_t q, int n);

}  // namespace sectorlab::stabilizers

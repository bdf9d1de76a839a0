#pragma once

// Finite groups of polynomial matrices over F_q[t], stored as explicit
// element lists and built by closure under a generator set.

#include <cstddef>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "sectorlab/matrix.hpp"
#include "sectorlab/polyring.hpp"

namespace sectorlab::groups {

inline constexpr std::size_t kDefaultGroupBudget = 200'000;

/// Lexicographic order on entries (each entry by its own ordering).
bool matrix_less(const PolyMatrix& a, const PolyMatrix& b);

class FiniteMatrixGroup {
 public:
  /// Called on every newly found element; may throw to abort the closure.
  using Check = std::function<void(const PolyMatrix&)>;

  /// The trivial group.
  FiniteMatrixGroup(poly::PrimeField field, int n);

  /// Closure of the generators under multiplication. Generators must be
  /// invertible with finite order, so the closure is a group.
  static FiniteMatrixGroup generate(poly::PrimeField field, int n, std::vector<PolyMatrix> generators,
                                    std::size_t budget = kDefaultGroupBudget, const Check& check = {});

  const poly::PrimeField& field() const { return field_; }
  int n() const { return n_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  /// Elements in discovery order; index 0 is the identity.
  const std::vector<PolyMatrix>& elements() const { return elements_; }
  const std::vector<PolyMatrix>& generators() const { return generators_; }
  std::vector<PolyMatrix> sorted_elements() const;

  /// Wraps an element list already known to be closed (identity first or absent).
  static FiniteMatrixGroup from_elements(poly::PrimeField field, int n, std::vector<PolyMatrix> generators,
                                         const std::vector<PolyMatrix>& elements);

  bool contains(const PolyMatrix& g) const { return index_.count(g) != 0; }
  std::optional<std::size_t> index_of(const PolyMatrix& g) const;
  bool is_subgroup_of(const FiniteMatrixGroup& other) const;
  bool same_elements(const FiniteMatrixGroup& other) const;

 private:
  poly::PrimeField field_;
  int n_;
  std::vector<PolyMatrix> generators_;
  std::vector<PolyMatrix> elements_;
  std::unordered_map<PolyMatrix, std::size_t, PolyMatrixHash> index_;
};

PolyMatrix group_inverse(const PolyMatrix& g);
PolyMatrix group_commutator(const PolyMatrix& a, const PolyMatrix& b);

/// Smallest subgroup of `ambient` containing `seeds` and normalized by it.
FiniteMatrixGroup normal_closure(const FiniteMatrixGroup& ambient, std::vector<PolyMatrix> seeds,
                                 std::size_t budget = kDefaultGroupBudget);

/// [A, B] for subgroups A, B of `ambient` whose generators generate `ambient` together.
FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& ambient, const FiniteMatrixGroup& a,
                                      const FiniteMatrixGroup& b,
                                      std::size_t budget = kDefaultGroupBudget);

/// [G, G].
FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& g, std::size_t budget = kDefaultGroupBudget);

}  // namespace sectorlab::groups

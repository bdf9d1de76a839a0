#include "sectorlab/finite_group.hpp"

#include <algorithm>
#include <stdexcept>

#include "sectorlab/errors.hpp"

namespace sectorlab::groups {

bool matrix_less(const PolyMatrix& a, const PolyMatrix& b) {
  return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                      b.entries().end());
}

FiniteMatrixGroup::FiniteMatrixGroup(poly::PrimeField field, int n) : field_(field), n_(n) {
  elements_.push_back(PolyMatrix::identity(field, n));
  index_.emplace(elements_.front(), 0);
}

FiniteMatrixGroup FiniteMatrixGroup::generate(poly::PrimeField field, int n,
                                              std::vector<PolyMatrix> generators, std::size_t budget,
                                              const Check& check) {
  FiniteMatrixGroup g(field, n);
  for (const auto& x : generators)
    if (x.size() != n) throw std::invalid_argument("generator has the wrong size");
  // Drop identity and repeated generators; keep first occurrence order.
  std::unordered_map<PolyMatrix, int, PolyMatrixHash> seen;
  for (auto& x : generators)
    if (!x.is_identity() && seen.emplace(x, 0).second) g.generators_.push_back(std::move(x));
  for (std::size_t k = 0; k < g.elements_.size(); ++k) {
    for (const auto& x : g.generators_) {
      PolyMatrix y = g.elements_[k] * x;
      if (g.index_.count(y)) continue;
      if (g.elements_.size() >= budget)
        throw BudgetExceeded("group closure exceeds " + std::to_string(budget) + " elements");
      if (check) check(y);
      g.index_.emplace(y, g.elements_.size());
      g.elements_.push_back(std::move(y));
    }
  }
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::from_elements(poly::PrimeField field, int n,
                                                   std::vector<PolyMatrix> generators,
                                                   const std::vector<PolyMatrix>& elements) {
  FiniteMatrixGroup g(field, n);
  g.generators_ = std::move(generators);
  for (const auto& x : elements) {
    if (x.size() != n) throw std::invalid_argument("element has the wrong size");
    if (g.index_.emplace(x, g.elements_.size()).second) g.elements_.push_back(x);
  }
  return g;
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const PolyMatrix& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<PolyMatrix> FiniteMatrixGroup::sorted_elements() const {
  auto out = elements_;
  std::sort(out.begin(), out.end(), matrix_less);
  return out;
}

bool FiniteMatrixGroup::is_subgroup_of(const FiniteMatrixGroup& other) const {
  return std::all_of(elements_.begin(), elements_.end(),
                     [&](const PolyMatrix& g) { return other.contains(g); });
}

bool FiniteMatrixGroup::same_elements(const FiniteMatrixGroup& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

PolyMatrix group_inverse(const PolyMatrix& g) { return inverse_unimodular(g); }

PolyMatrix group_commutator(const PolyMatrix& a, const PolyMatrix& b) {
  return a * b * group_inverse(a) * group_inverse(b);
}

FiniteMatrixGroup normal_closure(const FiniteMatrixGroup& ambient, std::vector<PolyMatrix> seeds,
                                 std::size_t budget) {
  std::vector<PolyMatrix> conj_by;
  for (const auto& x : ambient.generators()) conj_by.push_back(x);
  std::vector<PolyMatrix> conj_inv;
  for (const auto& x : conj_by) conj_inv.push_back(group_inverse(x));
  auto sub = FiniteMatrixGroup::generate(ambient.field(), ambient.n(), seeds, budget);
  while (true) {
    std::vector<PolyMatrix> extra;
    for (const auto& y : sub.generators())
      for (std::size_t k = 0; k < conj_by.size(); ++k) {
        PolyMatrix c = conj_by[k] * y * conj_inv[k];
        if (!sub.contains(c) &&
            std::find(extra.begin(), extra.end(), c) == extra.end())
          extra.push_back(std::move(c));
      }
    if (extra.empty()) return sub;
    auto gens = sub.generators();
    for (auto& e : extra) gens.push_back(std::move(e));
    sub = FiniteMatrixGroup::generate(ambient.field(), ambient.n(), std::move(gens), budget);
  }
}

FiniteMatrixGroup commutator_subgroup(const FiniteMatrixGroup& ambient, const FiniteMatrixGroup& a,
                                      const FiniteMatrixGroup& b, std::size_t budget) {
  std::vector<PolyMatrix> seeds;
  for (const auto& x : a.generators())
    for (const auto& y : b.generators()) {
      PolyMatrix c = group_commutator(x, y);
      if (!c.is_identity()) seeds.push_back(std::move(c));
    }
  return normal_closure(ambient, std::move(seeds), budget);
}

FiniteMatrixGroup derived_subgroup(const FiniteMatrixGroup& g, std::size_t budget) {
  return commutator_subgroup(g, g, g, budget);
}

}  // namespace sectorlab::groups

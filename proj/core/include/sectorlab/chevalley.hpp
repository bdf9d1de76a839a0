#pragma once

// SL_n over F_q(t): root elements, coweight tori, elementary generating sets,
// and an exhaustive BN-pair axiom checker for finite Tits systems.

#include <cstddef>
#include <string>
#include <vector>

#include "sectorlab/matrix.hpp"
#include "sectorlab/polyring.hpp"
#include "sectorlab/rootsys.hpp"

namespace sectorlab::chevalley {

/// Element of SL_n(F_q(t)); the determinant is exactly 1.
class GroupElement {
 public:
  explicit GroupElement(RatMatrix m);
  explicit GroupElement(const PolyMatrix& m) : GroupElement(to_rational(m)) {}
  static GroupElement identity(poly::PrimeField field, int n);

  const RatMatrix& matrix() const { return m_; }
  int size() const { return m_.size(); }
  const poly::PrimeField& field() const { return m_.field(); }
  bool is_identity() const { return m_.is_identity(); }
  GroupElement inverse() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  struct Trusted {};
  GroupElement(RatMatrix m, Trusted) : m_(std::move(m)) {}
  RatMatrix m_;
};

/// a b a^{-1} b^{-1}.
GroupElement commutator(const GroupElement& a, const GroupElement& b);

/// e_ij(u): identity plus u at (i, j); indices are 0-based.
GroupElement root_element(int i, int j, const poly::RationalFunction& u, int n);
PolyMatrix root_element(int i, int j, const poly::Polynomial& u, int n);

/// diag(a^{lambda_1}, ..., a^{lambda_n}); requires sum(lambda) = 0 and a != 0.
PolyMatrix coweight_torus(const poly::FieldElement& a, const roots::Coweight& lambda);

/// Weight w with h e_ij(1) h^{-1} = e_ij(a^w), computed with a transcendental
/// (a = t in F_q(t)) so the comparison is symbolic rather than pointwise.
int torus_conjugation_weight(poly::PrimeField field, const roots::Coweight& lambda, int i, int j);

/// All e_ij(u) with u != 0 and deg u <= max_degree; closed under inversion.
/// Count: n(n-1)(q^{max_degree+1} - 1).
std::vector<PolyMatrix> elementary_generators(int n, poly::PrimeField field, int max_degree);

/// Every element of SL_n(F_q), in lexicographic residue order.
std::vector<PolyMatrix> enumerate_special_linear(int n, poly::PrimeField field);

// ---------------------------------------------------------------------------
// Finite Tits systems

/// Explicit finite group of constant matrices with subgroups B and N and
/// representatives in N of the distinguished Weyl generators S.
struct FiniteTitsData {
  std::vector<PolyMatrix> ambient;
  std::vector<std::size_t> borel;        // indices into ambient
  std::vector<std::size_t> normalizer;   // indices into ambient
  std::vector<std::size_t> reflections;  // indices into ambient, elements of N
  std::string label;
};

/// SL_n(F_q) with B = upper triangular, N = monomial, S = adjacent transpositions.
FiniteTitsData spherical_tits_system(int n, poly::PrimeField field);

/// Control fixture: the same data with B replaced by the whole group, which violates (BN2).
FiniteTitsData degenerate_tits_system(int n, poly::PrimeField field);

struct Bn1Result {
  std::size_t reflection = 0;  // index into FiniteTitsData::reflections
  std::size_t weyl = 0;        // index into BnReport::weyl_representatives
  bool holds = false;
};

struct BnReport {
  std::string label;
  std::size_t group_order = 0;
  std::size_t borel_order = 0;
  std::size_t normalizer_order = 0;
  std::size_t torus_order = 0;
  std::size_t weyl_order = 0;
  std::vector<std::size_t> weyl_representatives;  // indices into ambient
  std::vector<std::string> structural_failures;
  std::vector<Bn1Result> bn1;
  std::vector<bool> bn2;  // per reflection: s B s^{-1} is not contained in B
  bool pass = false;
};

/// Exhaustive check of (BN1) and (BN2). Structural problems (non-subgroups,
/// B and N not generating, B cap N not normal in N) are reported, not thrown.
BnReport check_bn_axioms(const FiniteTitsData& data, std::size_t workers = 1);

}  // namespace sectorlab::chevalley

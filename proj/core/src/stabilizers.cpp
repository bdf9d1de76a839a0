#include "sectorlab/stabilizers.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "sectorlab/chevalley.hpp"
#include "sectorlab/errors.hpp"

namespace sectorlab::stabilizers {

using poly::Polynomial;
using poly::PrimeField;
using poly::Residue;

namespace {

std::vector<PolyMatrix> diagonal_torus_generators(int n, const PrimeField& F) {
  std::vector<PolyMatrix> out;
  for (int k = 0; k + 1 < n; ++k)
    for (Residue a : F.units()) {
      if (a == 1) continue;
      PolyMatrix h = PolyMatrix::identity(F, n);
      h(k, k) = Polynomial::constant(F, a);
      h(k + 1, k + 1) = Polynomial::constant(F, F.inv(a));
      out.push_back(std::move(h));
    }
  return out;
}

bool is_constant_diagonal(const PolyMatrix& g) {
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (i != j && !g(i, j).is_zero()) return false;
      if (i == j && g(i, i).degree() != 0) return false;
    }
  return true;
}

}  // namespace

FiniteMatrixGroup realize_stabilizer(const sector::StabilizerDescription& desc, PrimeField field,
                                     std::size_t budget) {
  const int n = desc.n();
  std::vector<PolyMatrix> gens = diagonal_torus_generators(n, field);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j || !desc.allows(i, j)) continue;
      const int top = desc.is_levi(i, j) ? 0 : desc.bound(i, j);
      for (int k = 0; k <= top; ++k)
        gens.push_back(chevalley::root_element(i, j, Polynomial::monomial(field, 1, k), n));
    }
  auto check = [&](const PolyMatrix& g) {
    if (!desc.fits(g))
      throw InvariantViolation("stabilizer closure left the degree pattern: " + g.to_string());
    if (!g.determinant().is_one())
      throw InvariantViolation("stabilizer closure produced determinant != 1: " + g.to_string());
  };
  return FiniteMatrixGroup::generate(field, n, std::move(gens), budget, check);
}

BruteResult brute_stabilizer(const building::BuildingSimplex& sigma, const BruteOptions& opt) {
  if (sigma.vertices.empty()) throw std::invalid_argument("empty simplex");
  if (opt.search_degree < 0 || opt.search_length < 1 || opt.budget < 1)
    throw std::invalid_argument("search budgets must be positive");
  const PrimeField F = sigma.vertices.front().field();
  const int n = sigma.vertices.front().size();
  auto fixes = [&](const PolyMatrix& g) {
    return std::all_of(sigma.vertices.begin(), sigma.vertices.end(),
                       [&](const building::BuildingVertex& v) { return building::act(g, v) == v; });
  };

  std::vector<PolyMatrix> candidates = chevalley::enumerate_special_linear(n, F);
  for (auto& e : chevalley::elementary_generators(n, F, opt.search_degree)) candidates.push_back(std::move(e));
  BruteResult res{FiniteMatrixGroup(F, n), candidates.size(), 0, false};
  std::vector<PolyMatrix> gens;
  for (auto& c : candidates)
    if (!c.is_identity() && fixes(c)) gens.push_back(std::move(c));
  res.fixing_generators = gens.size();

  // Breadth-first products by word length, discarding anything above the degree cap.
  std::vector<PolyMatrix> found{PolyMatrix::identity(F, n)};
  std::unordered_set<PolyMatrix, PolyMatrixHash> seen{found.front()};
  std::size_t layer_begin = 0;
  for (int len = 0; len < opt.search_length; ++len) {
    const std::size_t layer_end = found.size();
    if (layer_begin == layer_end) break;
    for (std::size_t k = layer_begin; k < layer_end; ++k)
      for (const auto& g : gens) {
        PolyMatrix y = found[k] * g;
        if (seen.count(y)) continue;
        if (max_degree(y) > opt.search_degree) {
          res.lower_bound_only = true;
          continue;
        }
        if (found.size() >= opt.budget) throw BudgetExceeded("brute stabilizer search exceeds its budget");
        seen.insert(y);
        found.push_back(std::move(y));
      }
    layer_begin = layer_end;
  }
  if (layer_begin != found.size()) res.lower_bound_only = true;
  for (const auto& g : found)
    if (!fixes(g)) throw InvariantViolation("product of fixing generators moved the simplex");
  res.group = FiniteMatrixGroup::from_elements(F, n, std::move(gens), found);
  return res;
}

PolyMatrix levi_projection(const PolyMatrix& g, const sector::StabilizerDescription& desc) {
  const int n = g.size();
  PolyMatrix out(g.field(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || desc.is_levi(i, j)) out(i, j) = Polynomial::constant(g.field(), g(i, j).coeff(0));
  return out;
}

FiniteMatrixGroup unipotent_part(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc) {
  std::vector<PolyMatrix> elems;
  for (const auto& g : gamma.elements())
    if (levi_projection(g, desc).is_identity()) elems.push_back(g);
  return FiniteMatrixGroup::from_elements(gamma.field(), gamma.n(), elems, elems);
}

FiniteMatrixGroup levi_part(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc) {
  std::vector<PolyMatrix> elems;
  std::unordered_set<PolyMatrix, PolyMatrixHash> seen;
  for (const auto& g : gamma.elements()) {
    PolyMatrix l = levi_projection(g, desc);
    if (seen.insert(l).second) elems.push_back(std::move(l));
  }
  return FiniteMatrixGroup::from_elements(gamma.field(), gamma.n(), elems, elems);
}

ExtensionReport extension_check(const FiniteMatrixGroup& gamma, const sector::StabilizerDescription& desc) {
  ExtensionReport rep;
  const auto U = unipotent_part(gamma, desc);
  const auto L = levi_part(gamma, desc);
  rep.gamma_order = gamma.order();
  rep.unipotent_order = U.order();
  rep.levi_order = L.order();
  std::size_t predicted = 1;
  for (int k = 0; k < desc.unipotent_log_order(); ++k) predicted *= gamma.field().modulus();
  rep.predicted_unipotent_order = predicted;
  if (predicted != U.order())
    rep.violations.push_back("unipotent order " + std::to_string(U.order()) + " differs from predicted " +
                             std::to_string(predicted));

  const auto& gens = gamma.generators().empty() ? gamma.elements() : gamma.generators();
  rep.projection_homomorphism = true;
  for (const auto& x : gens) {
    const PolyMatrix px = levi_projection(x, desc);
    for (const auto& h : gamma.elements())
      if (!(levi_projection(x * h, desc) == px * levi_projection(h, desc))) {
        rep.projection_homomorphism = false;
        break;
      }
    if (!rep.projection_homomorphism) break;
  }
  if (!rep.projection_homomorphism) rep.violations.push_back("Levi projection is not a homomorphism");

  rep.unipotent_normal = true;
  for (const auto& x : gens) {
    const PolyMatrix xi = groups::group_inverse(x);
    for (const auto& u : U.elements())
      if (!U.contains(x * u * xi)) {
        rep.unipotent_normal = false;
        break;
      }
    if (!rep.unipotent_normal) break;
  }
  if (!rep.unipotent_normal) rep.violations.push_back("U is not normal in the stabilizer");

  rep.levi_subgroup = L.contains(PolyMatrix::identity(gamma.field(), gamma.n()));
  for (const auto& a : L.elements()) {
    for (const auto& b : L.elements())
      if (!L.contains(a * b)) {
        rep.levi_subgroup = false;
        break;
      }
    if (!rep.levi_subgroup) break;
  }
  if (!rep.levi_subgroup) rep.violations.push_back("Levi image is not a subgroup");

  rep.orders_factor = rep.gamma_order == rep.unipotent_order * rep.levi_order;
  if (!rep.orders_factor) rep.violations.push_back("|Gamma| != |U| * |L|");

  // The section: constant Levi matrices lie in Gamma and project to themselves.
  rep.splits = std::all_of(L.elements().begin(), L.elements().end(), [&](const PolyMatrix& l) {
    return gamma.contains(l) && levi_projection(l, desc) == l;
  });
  if (!rep.splits) rep.violations.push_back("constant Levi matrices do not split the projection");

  // Conjugating by a diagonal torus element scales entry (i, j) by h_i / h_j and keeps degrees.
  rep.torus_stable = true;
  const PrimeField& F = gamma.field();
  for (const auto& h : gamma.elements()) {
    if (!is_constant_diagonal(h)) continue;
    const PolyMatrix hi = groups::group_inverse(h);
    for (const auto& u : U.elements()) {
      const PolyMatrix c = h * u * hi;
      bool good = U.contains(c);
      for (int i = 0; i < c.size() && good; ++i)
        for (int j = 0; j < c.size() && good; ++j) {
          const Residue scale = F.mul(h(i, i).coeff(0), F.inv(h(j, j).coeff(0)));
          good = c(i, j) == u(i, j).scaled(scale) && c(i, j).degree() == u(i, j).degree();
        }
      if (!good) {
        rep.torus_stable = false;
        break;
      }
    }
    if (!rep.torus_stable) break;
  }
  if (!rep.torus_stable) rep.violations.push_back("torus conjugation does not preserve U with scaled entries");
  return rep;
}

FiniteMatrixGroup unipotent_radical(int n, PrimeField field, const std::vector<int>& simple_subset) {
  if (n < 2) throw std::invalid_argument("unipotent radical needs n >= 2");
  std::vector<char> in(n - 1, 0);
  for (int k : simple_subset) {
    if (k < 0 || k >= n - 1) throw std::invalid_argument("simple root index out of range");
    in[k] = 1;
  }
  std::vector<PolyMatrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      bool involved = false;
      for (int k = i; k < j; ++k) involved = involved || in[k];
      if (involved) gens.push_back(chevalley::root_element(i, j, Polynomial::constant(field, 1), n));
    }
  return FiniteMatrixGroup::generate(field, n, std::move(gens));
}

CentralSeries lower_central_series(const FiniteMatrixGroup& u) {
  CentralSeries out;
  out.orders.push_back(u.order());
  if (u.is_trivial()) return out;
  FiniteMatrixGroup current = u;
  while (true) {
    auto next = groups::commutator_subgroup(u, u, current);
    ++out.length;
    out.orders.push_back(next.order());
    if (next.is_trivial()) return out;
    if (next.order() == current.order())
      throw InvariantViolation("lower central series stalls at order " + std::to_string(next.order()));
    current = std::move(next);
  }
}

std::size_t AbelianInvariants::order() const {
  std::size_t o = 1;
  for (auto d : invariant_factors) o *= d;
  return o;
}

namespace {

std::vector<std::size_t> prime_factors(std::size_t m) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      out.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) out.push_back(m);
  return out;
}

}  // namespace

AbelianInvariants invariants_from_order_counts(const std::vector<std::pair<std::size_t, std::size_t>>& counts) {
  std::size_t total = 0;
  for (auto [d, c] : counts) total += c;
  if (total == 0) throw std::invalid_argument("empty group");
  // For each prime p: #{x : p^k x = 0} = p^(sum_i min(k, e_i)).
  std::map<std::size_t, std::vector<int>> exponents;  // p -> e_i descending
  for (std::size_t p : prime_factors(total)) {
    std::vector<int> ge;  // ge[k-1] = number of factors with e_i >= k
    int prev = 0;
    std::size_t pk = 1;
    while (true) {
      pk *= p;
      std::size_t killed = 0;
      for (auto [d, c] : counts)
        if (pk % d == 0) killed += c;
      int lg = 0;
      std::size_t x = killed;
      while (x % p == 0 && x > 1) {
        x /= p;
        ++lg;
      }
      if (x != 1) throw std::invalid_argument("order counts do not come from an abelian group");
      if (lg == prev) break;
      ge.push_back(lg - prev);
      prev = lg;
    }
    std::vector<int> es(ge.empty() ? 0 : ge.front(), 0);
    for (std::size_t k = 0; k < ge.size(); ++k)
      for (int i = 0; i < ge[k]; ++i) ++es[i];
    exponents[p] = es;  // descending
  }
  std::size_t factors = 0;
  for (const auto& [p, es] : exponents) factors = std::max(factors, es.size());
  AbelianInvariants out;
  for (std::size_t i = 0; i < factors; ++i) {
    std::size_t d = 1;
    for (const auto& [p, es] : exponents)
      if (i < es.size())
        for (int k = 0; k < es[i]; ++k) d *= p;
    out.invariant_factors.push_back(d);
  }
  std::reverse(out.invariant_factors.begin(), out.invariant_factors.end());
  return out;
}

AbelianInvariants abelian_invariants(const FiniteMatrixGroup& g, std::size_t budget) {
  if (g.order() > budget) throw BudgetExceeded("group too large for abelianization");
  const auto K = groups::derived_subgroup(g, budget);
  std::vector<int> coset(g.order(), -1);
  std::map<std::size_t, std::size_t> by_order;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (coset[i] >= 0) continue;
    const PolyMatrix& x = g.elements()[i];
    for (const auto& k : K.elements()) coset[*g.index_of(x * k)] = static_cast<int>(i);
    std::size_t ord = 1;
    PolyMatrix p = x;
    while (!K.contains(p)) {
      p = p * x;
      ++ord;
    }
    ++by_order[ord];
  }
  return invariants_from_order_counts({by_order.begin(), by_order.end()});
}

bool is_sn_witness(const PrimeField& field, const std::vector<Residue>& units) {
  if (units.size() > 24) throw std::invalid_argument("witness family too large to check exhaustively");
  for (Residue a : units)
    if (a == 0 || a >= field.modulus()) return false;
  const std::size_t subsets = std::size_t{1} << units.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    Residue s = 0;
    for (std::size_t i = 0; i < units.size(); ++i)
      if (mask >> i & 1) s = field.add(s, units[i]);
    if (s == 0) return false;
  }
  return true;
}

std::optional<std::vector<Residue>> sn_witness(std::uint32_t q, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const PrimeField F(q);
  if (n == 0) return std::vector<Residue>{};
  std::vector<Residue> t(n, 1);
  while (true) {
    if (is_sn_witness(F, t)) return t;
    int k = n - 1;
    while (k >= 0 && t[k] == q - 1) t[k--] = 1;
    if (k < 0) return std::nullopt;
    ++t[k];
  }
}

}  // namespace sectorlab::stabilizers

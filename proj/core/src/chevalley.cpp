#include "sectorlab/chevalley.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "sectorlab/errors.hpp"
#include "sectorlab/parallel.hpp"

namespace sectorlab::chevalley {

using poly::FieldElement;
using poly::Polynomial;
using poly::PrimeField;
using poly::RationalFunction;
using poly::Residue;

GroupElement::GroupElement(RatMatrix m) : m_(std::move(m)) {
  if (!m_.determinant().is_one())
    throw std::invalid_argument("group element must have determinant exactly 1");
}

GroupElement GroupElement::identity(PrimeField field, int n) {
  return GroupElement(RatMatrix::identity(field, n), Trusted{});
}

GroupElement GroupElement::inverse() const { return GroupElement(sectorlab::inverse(m_), Trusted{}); }

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return GroupElement(a.m_ * b.m_, GroupElement::Trusted{});
}

GroupElement commutator(const GroupElement& a, const GroupElement& b) {
  return a * b * a.inverse() * b.inverse();
}

namespace {

void check_root_indices(int i, int j, int n) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("root index out of range");
  if (i == j) throw std::invalid_argument("root element needs i != j");
}

RationalFunction t_power(PrimeField field, int k) {
  if (k >= 0) return RationalFunction(Polynomial::monomial(field, 1, k));
  return poly::rat_normalize(Polynomial::constant(field, 1), Polynomial::monomial(field, 1, -k));
}

}  // namespace

GroupElement root_element(int i, int j, const RationalFunction& u, int n) {
  check_root_indices(i, j, n);
  RatMatrix m = RatMatrix::identity(u.field(), n);
  m(i, j) = u;
  return GroupElement(std::move(m));
}

PolyMatrix root_element(int i, int j, const Polynomial& u, int n) {
  check_root_indices(i, j, n);
  PolyMatrix m = PolyMatrix::identity(u.field(), n);
  m(i, j) = u;
  return m;
}

PolyMatrix coweight_torus(const FieldElement& a, const roots::Coweight& lambda) {
  if (a.is_zero()) throw std::invalid_argument("torus parameter must be a unit");
  const auto& e = lambda.exponents;
  if (e.empty()) throw std::invalid_argument("empty coweight");
  if (std::accumulate(e.begin(), e.end(), 0) != 0)
    throw std::invalid_argument("coweight entries must sum to zero for SL_n");
  const int n = static_cast<int>(e.size());
  PolyMatrix h(a.field(), n);
  for (int i = 0; i < n; ++i) h(i, i) = Polynomial::constant(a.field(), a.pow(e[i]).value());
  return h;
}

int torus_conjugation_weight(PrimeField field, const roots::Coweight& lambda, int i, int j) {
  const int n = static_cast<int>(lambda.size());
  check_root_indices(i, j, n);
  RatMatrix h(field, n);
  for (int k = 0; k < n; ++k) h(k, k) = t_power(field, lambda.exponents[k]);
  GroupElement torus(h);
  GroupElement root = root_element(i, j, RationalFunction::constant(field, 1), n);
  GroupElement conj = torus * root * torus.inverse();
  const RatMatrix& c = conj.matrix();
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (r == i && s == j) continue;
      bool ok = (r == s) ? c(r, s).is_one() : c(r, s).is_zero();
      if (!ok) throw InvariantViolation("conjugate of a root element left its root subgroup");
    }
  const RationalFunction& entry = c(i, j);
  if (entry.is_zero()) throw InvariantViolation("conjugated root entry vanished");
  const int w = entry.numerator().degree() - entry.denominator().degree();
  if (entry != t_power(field, w))
    throw InvariantViolation("conjugated root entry is not a monomial in the torus parameter");
  return w;
}

std::vector<PolyMatrix> elementary_generators(int n, PrimeField field, int max_degree) {
  if (n < 2) throw std::invalid_argument("elementary generators need n >= 2");
  if (max_degree < 0) throw std::invalid_argument("generator degree must be nonnegative");
  const std::uint32_t q = field.modulus();
  std::size_t per_root = 1;
  for (int d = 0; d <= max_degree; ++d) {
    per_root *= q;
    if (per_root > (1u << 20)) throw BudgetExceeded("too many elementary generators requested");
  }
  std::vector<PolyMatrix> out;
  out.reserve(static_cast<std::size_t>(n) * (n - 1) * (per_root - 1));
  std::vector<Residue> coeffs(max_degree + 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (std::size_t code = 1; code < per_root; ++code) {
        std::size_t c = code;
        for (auto& x : coeffs) {
          x = static_cast<Residue>(c % q);
          c /= q;
        }
        out.push_back(root_element(i, j, Polynomial(field, coeffs), n));
      }
    }
  return out;
}

std::vector<PolyMatrix> enumerate_special_linear(int n, PrimeField field) {
  const std::uint32_t q = field.modulus();
  const int cells = n * n;
  std::size_t total = 1;
  for (int k = 0; k < cells; ++k) {
    total *= q;
    if (total > (1u << 24)) throw BudgetExceeded("SL_n(F_q) enumeration too large");
  }
  std::vector<PolyMatrix> out;
  std::vector<Residue> digits(cells, 0);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int k = cells - 1; k >= 0; --k) {
      digits[k] = static_cast<Residue>(c % q);
      c /= q;
    }
    PolyMatrix m(field, n);
    for (int k = 0; k < cells; ++k) m(k / n, k % n) = Polynomial::constant(field, digits[k]);
    if (m.determinant().is_one()) out.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// BN-pair checker

namespace {

struct ResidueVectorHash {
  std::size_t operator()(const std::vector<Residue>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ x;
    return h;
  }
};

// Finite group of constant matrices addressed by index.
class ConstantGroup {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  explicit ConstantGroup(const std::vector<PolyMatrix>& elements)
      : field_(elements.at(0).field()), n_(elements.at(0).size()) {
    elems_.reserve(elements.size());
    for (const auto& m : elements) {
      std::vector<Residue> v(n_ * n_);
      for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
          if (m(i, j).degree() > 0) throw std::invalid_argument("Tits data must be constant matrices");
          v[i * n_ + j] = m(i, j).coeff(0);
        }
      index_.emplace(v, elems_.size());
      elems_.push_back(std::move(v));
    }
    std::vector<Residue> id(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
    identity_ = find(id);
    if (identity_ == npos) throw std::invalid_argument("ambient group lacks the identity");
  }

  std::size_t order() const { return elems_.size(); }
  std::size_t identity() const { return identity_; }

  std::size_t mul(std::size_t a, std::size_t b) const {
    const auto& x = elems_[a];
    const auto& y = elems_[b];
    std::vector<Residue> z(n_ * n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        Residue xik = x[i * n_ + k];
        if (xik == 0) continue;
        for (int j = 0; j < n_; ++j)
          z[i * n_ + j] = field_.add(z[i * n_ + j], field_.mul(xik, y[k * n_ + j]));
      }
    return find(z);
  }

  std::size_t inv(std::size_t a) const {
    // Finite group: a^{-1} = a^{ord(a) - 1}.
    std::size_t prev = identity_, cur = a;
    while (cur != identity_) {
      prev = cur;
      cur = mul(cur, a);
      if (cur == npos) return npos;
    }
    return prev;
  }

 private:
  std::size_t find(const std::vector<Residue>& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? npos : it->second;
  }

  PrimeField field_;
  int n_;
  std::vector<std::vector<Residue>> elems_;
  std::unordered_map<std::vector<Residue>, std::size_t, ResidueVectorHash> index_;
  std::size_t identity_ = npos;
};

bool is_subgroup(const ConstantGroup& g, const std::vector<std::size_t>& h) {
  std::vector<char> in(g.order(), 0);
  for (auto x : h) in[x] = 1;
  if (!in[g.identity()]) return false;
  for (auto x : h) {
    auto xi = g.inv(x);
    if (xi == ConstantGroup::npos || !in[xi]) return false;
    for (auto y : h) {
      auto p = g.mul(x, y);
      if (p == ConstantGroup::npos || !in[p]) return false;
    }
  }
  return true;
}

std::vector<char> closure(const ConstantGroup& g, const std::vector<std::size_t>& gens) {
  std::vector<char> seen(g.order(), 0);
  std::vector<std::size_t> queue{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto s : gens) {
      auto p = g.mul(queue[head], s);
      if (p == ConstantGroup::npos || seen[p]) continue;
      seen[p] = 1;
      queue.push_back(p);
    }
  return seen;
}

std::vector<char> double_coset(const ConstantGroup& g, const std::vector<std::size_t>& b,
                               std::size_t x) {
  std::vector<char> out(g.order(), 0);
  for (auto b1 : b) {
    auto b1x = g.mul(b1, x);
    for (auto b2 : b) out[g.mul(b1x, b2)] = 1;
  }
  return out;
}

}  // namespace

FiniteTitsData spherical_tits_system(int n, PrimeField field) {
  FiniteTitsData data;
  data.ambient = enumerate_special_linear(n, field);
  data.label = "SL_" + std::to_string(n) + "(F_" + std::to_string(field.modulus()) + ")";
  auto is_upper = [&](const PolyMatrix& m) {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j)
        if (!m(i, j).is_zero()) return false;
    return true;
  };
  auto is_monomial = [&](const PolyMatrix& m) {
    for (int i = 0; i < n; ++i) {
      int nonzero = 0;
      for (int j = 0; j < n; ++j) nonzero += !m(i, j).is_zero();
      if (nonzero != 1) return false;
    }
    return true;
  };
  for (std::size_t k = 0; k < data.ambient.size(); ++k) {
    if (is_upper(data.ambient[k])) data.borel.push_back(k);
    if (is_monomial(data.ambient[k])) data.normalizer.push_back(k);
  }
  // s_i: swap rows i, i+1 with a sign so the determinant stays 1.
  for (int i = 0; i + 1 < n; ++i) {
    PolyMatrix s = PolyMatrix::identity(field, n);
    s(i, i) = Polynomial(field);
    s(i + 1, i + 1) = Polynomial(field);
    s(i, i + 1) = Polynomial::constant(field, 1);
    s(i + 1, i) = Polynomial::constant(field, -1);
    auto it = std::find(data.ambient.begin(), data.ambient.end(), s);
    data.reflections.push_back(static_cast<std::size_t>(it - data.ambient.begin()));
  }
  return data;
}

FiniteTitsData degenerate_tits_system(int n, PrimeField field) {
  FiniteTitsData data = spherical_tits_system(n, field);
  data.borel.resize(data.ambient.size());
  std::iota(data.borel.begin(), data.borel.end(), std::size_t{0});
  data.label += " with B = G";
  return data;
}

BnReport check_bn_axioms(const FiniteTitsData& data, std::size_t workers) {
  BnReport report;
  report.label = data.label;
  ConstantGroup g(data.ambient);
  report.group_order = g.order();
  report.borel_order = data.borel.size();
  report.normalizer_order = data.normalizer.size();

  auto fail = [&](std::string why) { report.structural_failures.push_back(std::move(why)); };
  if (!is_subgroup(g, data.borel)) fail("B is not a subgroup");
  if (!is_subgroup(g, data.normalizer)) fail("N is not a subgroup");
  {
    std::vector<std::size_t> gens = data.borel;
    gens.insert(gens.end(), data.normalizer.begin(), data.normalizer.end());
    auto gen = closure(g, gens);
    if (std::count(gen.begin(), gen.end(), 1) != static_cast<long>(g.order()))
      fail("B and N do not generate the ambient group");
  }
  std::vector<char> in_b(g.order(), 0), in_n(g.order(), 0);
  for (auto b : data.borel) in_b[b] = 1;
  for (auto x : data.normalizer) in_n[x] = 1;
  std::vector<std::size_t> torus;
  for (auto x : data.normalizer)
    if (in_b[x]) torus.push_back(x);
  report.torus_order = torus.size();
  std::vector<char> in_t(g.order(), 0);
  for (auto x : torus) in_t[x] = 1;
  for (auto s : data.reflections)
    if (!in_n[s]) fail("reflection representative outside N");
  if (!report.structural_failures.empty()) return report;

  for (auto x : data.normalizer) {
    auto xi = g.inv(x);
    for (auto t : torus)
      if (!in_t[g.mul(g.mul(x, t), xi)]) {
        fail("B cap N is not normal in N");
        return report;
      }
  }
  // Left coset representatives of T in N.
  std::vector<char> covered(g.order(), 0);
  for (auto x : data.normalizer) {
    if (covered[x]) continue;
    report.weyl_representatives.push_back(x);
    for (auto t : torus) covered[g.mul(x, t)] = 1;
  }
  report.weyl_order = report.weyl_representatives.size();
  {
    std::vector<std::size_t> gens = data.reflections;
    gens.insert(gens.end(), torus.begin(), torus.end());
    auto gen = closure(g, gens);
    for (auto x : data.normalizer)
      if (!gen[x]) {
        fail("S does not generate the Weyl group");
        return report;
      }
  }

  const std::size_t ns = data.reflections.size();
  const std::size_t nw = report.weyl_representatives.size();
  report.bn1 = parallel_map(workers, ns * nw, [&](std::size_t k) {
    Bn1Result r;
    r.reflection = k / nw;
    r.weyl = k % nw;
    const auto s = data.reflections[r.reflection];
    const auto w = report.weyl_representatives[r.weyl];
    auto target = double_coset(g, data.borel, g.mul(s, w));
    auto other = double_coset(g, data.borel, w);
    r.holds = true;
    for (auto b : data.borel) {
      auto x = g.mul(g.mul(s, b), w);
      if (!target[x] && !other[x]) {
        r.holds = false;
        break;
      }
    }
    return r;
  });
  auto bn2 = parallel_map(workers, ns, [&](std::size_t k) {
    const auto s = data.reflections[k];
    const auto si = g.inv(s);
    for (auto b : data.borel)
      if (!in_b[g.mul(g.mul(s, b), si)]) return 1;
    return 0;
  });
  report.bn2.assign(bn2.begin(), bn2.end());
  report.pass = std::all_of(report.bn1.begin(), report.bn1.end(), [](auto& r) { return r.holds; }) &&
                std::all_of(report.bn2.begin(), report.bn2.end(), [](bool b) { return b; });
  return report;
}

}  // namespace sectorlab::chevalley

#include "sectorlab/simpalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sectorlab/errors.hpp"

namespace sectorlab::simpalg {

using poly::PrimeField;
using poly::Residue;

SimplexPolynomial::SimplexPolynomial(PrimeField field, int level, int degree_cap)
    : field_(field), level_(level), cap_(degree_cap) {
  if (level < 0) throw std::invalid_argument("simplex level must be nonnegative");
  if (degree_cap < 0) throw std::invalid_argument("degree cap must be nonnegative");
}

SimplexPolynomial SimplexPolynomial::constant(PrimeField field, int level, std::int64_t c, int degree_cap) {
  SimplexPolynomial p(field, level, degree_cap);
  p.add_term(Monomial(level, 0), field.reduce(c));
  return p;
}

SimplexPolynomial SimplexPolynomial::variable(PrimeField field, int level, int j, int degree_cap) {
  if (j < 0 || j > level) throw std::out_of_range("variable index out of range");
  SimplexPolynomial p(field, level, degree_cap);
  if (j < level) {
    Monomial m(level, 0);
    m[j] = 1;
    p.add_term(m, 1);
    return p;
  }
  p.add_term(Monomial(level, 0), 1);
  for (int k = 0; k < level; ++k) {
    Monomial m(level, 0);
    m[k] = 1;
    p.add_term(m, field.neg(1));
  }
  return p;
}

int SimplexPolynomial::total_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
  return d;
}

void SimplexPolynomial::add_term(const Monomial& m, Residue c) {
  if (static_cast<int>(m.size()) != level_) throw std::invalid_argument("monomial length differs from level");
  if (std::accumulate(m.begin(), m.end(), 0) > cap_)
    throw BudgetExceeded("term exceeds the total degree cap of " + std::to_string(cap_));
  c = field_.reduce(c);
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

void SimplexPolynomial::check_compatible(const SimplexPolynomial& o) const {
  if (level_ != o.level_) throw std::invalid_argument("simplex polynomials at different levels");
  if (!(field_ == o.field_)) throw std::invalid_argument("simplex polynomials over different fields");
}

SimplexPolynomial operator+(const SimplexPolynomial& a, const SimplexPolynomial& b) {
  a.check_compatible(b);
  SimplexPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

SimplexPolynomial operator-(const SimplexPolynomial& a, const SimplexPolynomial& b) {
  a.check_compatible(b);
  SimplexPolynomial out = a;
  for (const auto& [m, c] : b.terms_) out.add_term(m, a.field_.neg(c));
  return out;
}

SimplexPolynomial operator*(const SimplexPolynomial& a, const SimplexPolynomial& b) {
  a.check_compatible(b);
  SimplexPolynomial out(a.field_, a.level_, std::min(a.cap_, b.cap_));
  SimplexPolynomial::Monomial m(a.level_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (int k = 0; k < a.level_; ++k) m[k] = ma[k] + mb[k];
      out.add_term(m, a.field_.mul(ca, cb));
    }
  return out;
}

SimplexPolynomial SimplexPolynomial::substitute(const std::vector<SimplexPolynomial>& images) const {
  if (static_cast<int>(images.size()) < level_) throw std::invalid_argument("too few images for substitution");
  if (images.empty()) {
    // Level 0: the algebra is the field itself.
    return *this;
  }
  const auto& proto = images.front();
  SimplexPolynomial out(field_, proto.level(), cap_);
  for (const auto& [m, c] : terms_) {
    SimplexPolynomial term = constant(field_, proto.level(), c, cap_);
    for (int j = 0; j < level_; ++j)
      for (int e = 0; e < m[j]; ++e) term = term * images[j];
    out = out + term;
  }
  return out;
}

std::string SimplexPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    const bool unit_monomial = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
    if (c != 1 || unit_monomial) os << c;
    bool need_star = c != 1;
    for (int k = 0; k < level_; ++k) {
      if (m[k] == 0) continue;
      os << (need_star ? "*" : "") << 'X' << k;
      if (m[k] > 1) os << '^' << m[k];
      need_star = true;
    }
  }
  return os.str();
}

SimplexPolynomial face(int i, const SimplexPolynomial& p) {
  const int n = p.level();
  if (n < 1) throw std::out_of_range("face maps need level >= 1");
  if (i < 0 || i > n) throw std::out_of_range("face index out of range");
  const auto& F = p.field();
  std::vector<SimplexPolynomial> images;
  for (int j = 0; j < n; ++j) {
    if (j < i) images.push_back(SimplexPolynomial::variable(F, n - 1, j, p.degree_cap()));
    else if (j == i) images.emplace_back(F, n - 1, p.degree_cap());
    else images.push_back(SimplexPolynomial::variable(F, n - 1, j - 1, p.degree_cap()));
  }
  if (images.empty()) return SimplexPolynomial(F, n - 1, p.degree_cap());
  return p.substitute(images);
}

SimplexPolynomial degeneracy(int i, const SimplexPolynomial& p) {
  const int n = p.level();
  if (i < 0 || i > n) throw std::out_of_range("degeneracy index out of range");
  const auto& F = p.field();
  const int cap = p.degree_cap();
  std::vector<SimplexPolynomial> images;
  for (int j = 0; j < n; ++j) {
    if (j < i) images.push_back(SimplexPolynomial::variable(F, n + 1, j, cap));
    else if (j == i)
      images.push_back(SimplexPolynomial::variable(F, n + 1, i, cap) +
                       SimplexPolynomial::variable(F, n + 1, i + 1, cap));
    else images.push_back(SimplexPolynomial::variable(F, n + 1, j + 1, cap));
  }
  if (images.empty()) {
    // Level 0 elements are constants.
    SimplexPolynomial out(F, n + 1, cap);
    for (const auto& [m, c] : p.terms()) out.add_term(SimplexPolynomial::Monomial(n + 1, 0), c);
    return out;
  }
  return p.substitute(images);
}

std::string MapSpec::to_string() const {
  return (kind == Kind::Face ? "d" : "s") + std::to_string(index);
}

SimplexPolynomial apply(const MapSpec& map, const SimplexPolynomial& p) {
  return map.kind == MapSpec::Kind::Face ? face(map.index, p) : degeneracy(map.index, p);
}

SimplexMatrix identity_matrix(PrimeField field, int level, int n) {
  SimplexMatrix m{n, {}};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.entries.push_back(SimplexPolynomial::constant(field, level, i == j ? 1 : 0));
  return m;
}

SimplexMatrix elementary_matrix(int n, int i, int j, const SimplexPolynomial& u) {
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("bad elementary indices");
  SimplexMatrix m = identity_matrix(u.field(), u.level(), n);
  m(i, j) = u;
  return m;
}

SimplexMatrix multiply(const SimplexMatrix& a, const SimplexMatrix& b) {
  if (a.n != b.n) throw std::invalid_argument("matrix size mismatch");
  SimplexMatrix c = a;
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < a.n; ++j) {
      SimplexPolynomial s(a(0, 0).field(), a(0, 0).level());
      for (int k = 0; k < a.n; ++k) s = s + a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

SimplexPolynomial determinant(const SimplexMatrix& m) {
  std::vector<int> perm(m.n);
  std::iota(perm.begin(), perm.end(), 0);
  const auto& F = m(0, 0).field();
  const int level = m(0, 0).level();
  SimplexPolynomial det(F, level);
  do {
    int inversions = 0;
    for (int a = 0; a < m.n; ++a)
      for (int b = a + 1; b < m.n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    SimplexPolynomial term = SimplexPolynomial::constant(F, level, inversions % 2 ? -1 : 1);
    for (int i = 0; i < m.n && !term.is_zero(); ++i) term = term * m(i, perm[i]);
    det = det + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

SimplexMatrix apply_to_matrix(const MapSpec& map, const SimplexMatrix& m) {
  SimplexMatrix out{m.n, {}};
  for (const auto& e : m.entries) out.entries.push_back(apply(map, e));
  return out;
}

bool SimplicialReport::pass() const {
  return std::all_of(families.begin(), families.end(), [](const auto& f) { return f.failures == 0; });
}

namespace {

void record(IdentityFamilyResult& fam, bool ok, const std::string& what) {
  ++fam.checks;
  if (ok) return;
  ++fam.failures;
  if (fam.counterexamples.size() < 5) fam.counterexamples.push_back(what);
}

}  // namespace

SimplicialReport check_simplicial_identities(int n_max, std::size_t samples, std::uint64_t seed, std::uint32_t q) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const PrimeField F(q);
  SimplicialReport rep{n_max, samples, seed, q, {}};
  IdentityFamilyResult dd{"d_i d_j = d_{j-1} d_i (i < j)", 0, 0, {}};
  IdentityFamilyResult ds_low{"d_i s_j = s_{j-1} d_i (i < j)", 0, 0, {}};
  IdentityFamilyResult ds_id{"d_j s_j = d_{j+1} s_j = id", 0, 0, {}};
  IdentityFamilyResult ds_high{"d_i s_j = s_j d_{i-1} (i > j + 1)", 0, 0, {}};
  IdentityFamilyResult ss{"s_i s_j = s_{j+1} s_i (i <= j)", 0, 0, {}};
  IdentityFamilyResult det{"det = 1 preserved by faces and degeneracies", 0, 0, {}};
  std::mt19937_64 rng(seed);

  for (int n = 0; n <= n_max; ++n) {
    for (std::size_t s = 0; s < samples; ++s) {
      const auto p = random_simplex_polynomial(F, n, rng);
      const std::string where = " at level " + std::to_string(n) + " on " + p.to_string();
      if (n >= 2)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            record(dd, face(i, face(j, p)) == face(j - 1, face(i, p)),
                   "i=" + std::to_string(i) + " j=" + std::to_string(j) + where);
      for (int j = 0; j <= n; ++j) {
        const auto sj = degeneracy(j, p);
        record(ds_id, face(j, sj) == p && face(j + 1, sj) == p, "j=" + std::to_string(j) + where);
        for (int i = 0; i <= n + 1; ++i) {
          if (i < j)
            record(ds_low, face(i, sj) == degeneracy(j - 1, face(i, p)),
                   "i=" + std::to_string(i) + " j=" + std::to_string(j) + where);
          else if (i > j + 1)
            record(ds_high, face(i, sj) == degeneracy(j, face(i - 1, p)),
                   "i=" + std::to_string(i) + " j=" + std::to_string(j) + where);
        }
        for (int i = 0; i <= j; ++i)
          record(ss, degeneracy(i, sj) == degeneracy(j + 1, degeneracy(i, p)),
                 "i=" + std::to_string(i) + " j=" + std::to_string(j) + where);
      }
    }
    // det 1 is kept by every structure map, on products e_12(a) e_21(b) e_12(c).
    const auto one = SimplexPolynomial::constant(F, n, 1);
    for (std::size_t s = 0; s < samples; ++s) {
      auto a = random_simplex_polynomial(F, n, rng, 3, 1);
      auto b = random_simplex_polynomial(F, n, rng, 3, 1);
      auto c = random_simplex_polynomial(F, n, rng, 3, 1);
      const auto m = multiply(multiply(elementary_matrix(2, 0, 1, a), elementary_matrix(2, 1, 0, b)),
                              elementary_matrix(2, 0, 1, c));
      record(det, determinant(m) == one, "sample matrix" + std::string(" at level ") + std::to_string(n));
      std::vector<MapSpec> maps;
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) maps.push_back({MapSpec::Kind::Face, i});
        maps.push_back({MapSpec::Kind::Degeneracy, i});
      }
      for (const auto& map : maps) {
        const auto image = apply_to_matrix(map, m);
        const auto target = SimplexPolynomial::constant(F, image(0, 0).level(), 1);
        record(det, determinant(image) == target, map.to_string() + " at level " + std::to_string(n));
      }
    }
  }
  rep.families = {dd, ds_low, ds_id, ds_high, ss, det};
  return rep;
}

}  // namespace sectorlab::simpalg

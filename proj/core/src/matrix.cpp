#include "sectorlab/matrix.hpp"

namespace sectorlab {

using poly::Polynomial;
using poly::RationalFunction;

RatMatrix to_rational(const PolyMatrix& m) {
  RatMatrix out(m.field(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out(i, j) = RationalFunction(m(i, j));
  return out;
}

RatMatrix inverse(const RatMatrix& m) {
  const int n = m.size();
  RatMatrix a = m;
  RatMatrix inv = RatMatrix::identity(m.field(), n);
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c).is_zero()) ++p;
    if (p == n) throw std::domain_error("singular matrix has no inverse");
    if (p != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    RationalFunction piv_inv = a(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      a(c, j) = a(c, j) * piv_inv;
      inv(c, j) = inv(c, j) * piv_inv;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      RationalFunction f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) = a(r, j) - f * a(c, j);
        inv(r, j) = inv(r, j) - f * inv(c, j);
      }
    }
  }
  return inv;
}

PolyMatrix inverse_unimodular(const PolyMatrix& m) {
  Polynomial det = m.determinant();
  if (det.degree() != 0) throw std::domain_error("polynomial matrix is not unimodular");
  PolyMatrix adj = m.adjugate();
  const auto c = m.field().inv(det.coeff(0));
  if (c == 1) return adj;
  PolyMatrix out(m.field(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) out(i, j) = adj(i, j).scaled(c);
  return out;
}

int max_degree(const PolyMatrix& m) {
  int d = poly::kDegreeOfZero;
  for (const auto& e : m.entries()) d = std::max(d, e.degree());
  return d;
}

PolyMatrix constant_term(const PolyMatrix& m) {
  PolyMatrix out(m.field(), m.size());
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      out(i, j) = Polynomial::constant(m.field(), m(i, j).coeff(0));
  return out;
}

std::size_t PolyMatrixHash::operator()(const PolyMatrix& m) const noexcept {
  std::size_t h = static_cast<std::size_t>(m.size());
  std::hash<Polynomial> hp;
  for (const auto& e : m.entries()) h = (h * 0x9E3779B97F4A7C15ull) ^ hp(e);
  return h;
}

}  // namespace sectorlab

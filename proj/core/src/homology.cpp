#include "sectorlab/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sectorlab/errors.hpp"
#include "sectorlab/sector.hpp"

namespace sectorlab::homology {

IntegerMatrix IntegerMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  IntegerMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool IntegerMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("integer matrix shape mismatch");
  IntegerMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (b(k, j) != 0) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntegerChainComplex boundary_matrices(std::vector<std::vector<int>> simplices) {
  IntegerChainComplex c;
  for (auto& s : simplices) {
    if (s.empty()) throw std::invalid_argument("empty simplex in complex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("simplex with repeated vertex");
    const std::size_t p = s.size() - 1;
    if (c.bases.size() <= p) c.bases.resize(p + 1);
    c.bases[p].push_back(s);
  }
  for (auto& level : c.bases) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  for (std::size_t p = 0; p < c.bases.size(); ++p) {
    if (p == 0) {
      c.boundary.emplace_back(0, c.bases[0].size());
      continue;
    }
    const auto& faces = c.bases[p - 1];
    IntegerMatrix d(faces.size(), c.bases[p].size());
    for (std::size_t col = 0; col < c.bases[p].size(); ++col) {
      const auto& s = c.bases[p][col];
      for (std::size_t k = 0; k < s.size(); ++k) {
        std::vector<int> f;
        for (std::size_t m = 0; m < s.size(); ++m)
          if (m != k) f.push_back(s[m]);
        auto it = std::lower_bound(faces.begin(), faces.end(), f);
        if (it == faces.end() || *it != f)
          throw std::invalid_argument("simplex set is not closed under faces");
        d(static_cast<std::size_t>(it - faces.begin()), col) = (k % 2 == 0) ? 1 : -1;
      }
    }
    c.boundary.push_back(std::move(d));
  }
  for (std::size_t p = 2; p < c.boundary.size(); ++p)
    if (!(c.boundary[p - 1] * c.boundary[p]).is_zero())
      throw InvariantViolation("boundary of a boundary is nonzero in degree " + std::to_string(p));
  return c;
}

IntegerChainComplex sector_complex(int n, int r) {
  const auto verts = sector::sector_vertices(n, r);
  std::vector<std::vector<int>> simplices;
  for (const auto& s : sector::sector_simplices(n, r)) {
    std::vector<int> ids;
    for (const auto& x : s.vertices)
      ids.push_back(static_cast<int>(std::lower_bound(verts.begin(), verts.end(), x) - verts.begin()));
    simplices.push_back(std::move(ids));
  }
  return boundary_matrices(std::move(simplices));
}

IntegerChainComplex circle_fixture() {
  return boundary_matrices({{0}, {1}, {2}, {0, 1}, {1, 2}, {0, 2}});
}

namespace {

void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

}  // namespace

SmithForm smith_normal_form(IntegerMatrix m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t D = std::min(R, C);
  SmithForm out;
  for (std::size_t t = 0; t < D; ++t) {
    while (true) {
      // Smallest nonzero entry of the remaining block goes to (t, t).
      bool any = false;
      std::size_t pi = t, pj = t;
      Integer best;
      for (std::size_t i = t; i < R; ++i)
        for (std::size_t j = t; j < C; ++j) {
          if (m(i, j) == 0) continue;
          Integer a = abs(m(i, j));
          if (!any || a < best) {
            any = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!any) break;
      swap_rows(m, t, pi);
      swap_cols(m, t, pj);
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        if (m(i, t) == 0) continue;
        Integer f = m(i, t) / m(t, t);
        for (std::size_t j = t; j < C; ++j) m(i, j) -= f * m(t, j);
        if (m(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        if (m(t, j) == 0) continue;
        Integer f = m(t, j) / m(t, t);
        for (std::size_t i = t; i < R; ++i) m(i, j) -= f * m(i, t);
        if (m(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility: fold a row with a non-multiple entry into row t.
      std::size_t bad_row = R;
      for (std::size_t i = t + 1; i < R && bad_row == R; ++i)
        for (std::size_t j = t + 1; j < C; ++j)
          if (m(i, j) % m(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row == R) break;
      for (std::size_t j = t; j < C; ++j) m(t, j) += m(bad_row, j);
    }
    if (m(t, t) < 0) m(t, t) = -m(t, t);
    out.diagonal.push_back(m(t, t));
    if (m(t, t) != 0) ++out.rank;
  }
  return out;
}

std::string HomologyGroup::to_string() const {
  std::string s;
  if (betti == 1) s = "Z";
  else if (betti > 1) s = "Z^" + std::to_string(betti);
  for (const auto& t : torsion) s += (s.empty() ? "" : " + ") + ("Z/" + t.str());
  return s.empty() ? "0" : s;
}

std::vector<HomologyGroup> homology_groups(const IntegerChainComplex& c) {
  const int top = c.top_dimension();
  std::vector<SmithForm> snf;
  for (int p = 0; p <= top; ++p) snf.push_back(smith_normal_form(c.boundary[p]));
  std::vector<HomologyGroup> out;
  for (int p = 0; p <= top; ++p) {
    HomologyGroup h;
    const std::size_t rank_in = p + 1 <= top ? snf[p + 1].rank : 0;
    h.betti = c.rank(p) - snf[p].rank - rank_in;
    if (p + 1 <= top)
      for (const auto& d : snf[p + 1].diagonal)
        if (d > 1) h.torsion.push_back(d);
    out.push_back(std::move(h));
  }
  return out;
}

long euler_characteristic(const IntegerChainComplex& c) {
  long chi = 0;
  for (int p = 0; p <= c.top_dimension(); ++p)
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(c.rank(p));
  return chi;
}

}  // namespace sectorlab::homology

#include "sectorlab/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include <boost/rational.hpp>

namespace sectorlab::roots {

std::string to_string(Family f) { return f == Family::A ? "A" : "D"; }

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "D" || s == "d") return Family::D;
  throw std::invalid_argument("unsupported root system family '" + s + "'");
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

bool Coweight::is_dominant_normalized() const {
  if (exponents.empty() || exponents.back() != 0) return false;
  return std::is_sorted(exponents.rbegin(), exponents.rend());
}

namespace {

int dot(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("rank mismatch in pairing");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0);
}

std::vector<int> unit(int dim, int i) {
  std::vector<int> v(dim, 0);
  v[i] = 1;
  return v;
}

}  // namespace

RootSystem generate_roots(Family family, int rank) {
  RootSystem rs;
  rs.family_ = family;
  rs.rank_ = rank;
  if (family == Family::A) {
    if (rank < 1) throw std::invalid_argument("type A needs rank >= 1");
    rs.ambient_ = rank + 1;
    for (int i = 0; i < rs.ambient_; ++i)
      for (int j = 0; j < rs.ambient_; ++j)
        if (i != j) rs.roots_.push_back(type_a_root(rs.ambient_, i, j));
    for (int i = 0; i < rank; ++i) rs.simples_.push_back(type_a_root(rs.ambient_, i, i + 1));
  } else {
    if (rank < 3) throw std::invalid_argument("type D needs rank >= 3");
    rs.ambient_ = rank;
    for (int i = 0; i < rank; ++i)
      for (int j = i + 1; j < rank; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            std::vector<int> v(rank, 0);
            v[i] = si;
            v[j] = sj;
            rs.roots_.push_back({v});
          }
    for (int i = 0; i + 1 < rank; ++i) rs.simples_.push_back(type_a_root(rank, i, i + 1));
    std::vector<int> last(rank, 0);
    last[rank - 2] = 1;
    last[rank - 1] = 1;
    rs.simples_.push_back({last});
  }
  std::sort(rs.roots_.begin(), rs.roots_.end());
  return rs;
}

bool RootSystem::contains(const Root& r) const {
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

int RootSystem::simple_index(const Root& r) const {
  auto it = std::find(simples_.begin(), simples_.end(), r);
  return it == simples_.end() ? -1 : static_cast<int>(it - simples_.begin());
}

std::vector<int> RootSystem::simple_coordinates(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != ambient_)
    throw std::invalid_argument("root has wrong ambient dimension");
  // Solve sum_k c_k simple_k = r exactly by Gauss-Jordan on the ambient x rank system.
  using Q = boost::rational<long>;
  const int rows = ambient_, cols = rank_;
  std::vector<std::vector<Q>> m(rows, std::vector<Q>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) m[i][k] = simples_[k].coords[i];
    m[i][cols] = r.coords[i];
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int c = 0; c < cols && row < rows; ++c) {
    int p = row;
    while (p < rows && m[p][c].numerator() == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[row]);
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][c].numerator() == 0) continue;
      Q f = m[i][c] / m[row][c];
      for (int k = c; k <= cols; ++k) m[i][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (m[i][cols].numerator() != 0) throw std::invalid_argument("vector is not in the root lattice span");
  std::vector<int> out(cols, 0);
  for (int i = 0; i < row; ++i) {
    Q v = m[i][cols] / m[i][pivot_col[i]];
    if (v.denominator() != 1) throw std::invalid_argument("non-integral simple coordinates");
    out[pivot_col[i]] = static_cast<int>(v.numerator());
  }
  return out;
}

bool RootSystem::is_positive(const Root& r) const {
  auto c = simple_coordinates(r);
  return std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  const int aa = dot(alpha.coords, alpha.coords);
  const int coeff = 2 * dot(beta.coords, alpha.coords) / aa;
  Root out = beta;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] -= coeff * alpha.coords[i];
  return out;
}

Root highest_root(const RootSystem& rs) {
  std::vector<std::vector<int>> coords;
  coords.reserve(rs.roots().size());
  for (const auto& r : rs.roots()) coords.push_back(rs.simple_coordinates(r));
  for (std::size_t i = 0; i < coords.size(); ++i) {
    bool dominates = true;
    for (std::size_t j = 0; j < coords.size() && dominates; ++j)
      for (std::size_t k = 0; k < coords[i].size(); ++k)
        if (coords[i][k] < coords[j][k]) {
          dominates = false;
          break;
        }
    if (dominates) return rs.roots()[i];
  }
  throw std::logic_error("root system has no highest root (not irreducible?)");
}

int pairing(const Root& alpha, const Coweight& x) { return dot(alpha.coords, x.exponents); }

int multiplicity_in_highest(const RootSystem& rs, const Root& alpha) {
  int idx = rs.simple_index(alpha);
  if (idx < 0) throw std::invalid_argument("multiplicity requested for a non-simple root");
  return rs.simple_coordinates(highest_root(rs))[idx];
}

Root type_a_root(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n || i == j)
    throw std::invalid_argument("invalid type A root indices");
  Root r{unit(n, i)};
  r.coords[j] = -1;
  return r;
}

}  // namespace sectorlab::roots

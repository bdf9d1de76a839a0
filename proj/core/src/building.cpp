#include "sectorlab/building.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "sectorlab/errors.hpp"
#include "sectorlab/lattice.hpp"
#include "sectorlab/parallel.hpp"

namespace sectorlab::building {

using lattice::SeriesMatrix;
using poly::Polynomial;
using poly::PrimeField;
using poly::RationalFunction;
using poly::Residue;

BuildingVertex::BuildingVertex(PrimeField field, std::vector<int> exponents,
                               std::vector<std::vector<Residue>> lower)
    : field_(field), exponents_(std::move(exponents)), lower_(std::move(lower)) {
  const int n = size();
  if (n < 1) throw std::invalid_argument("vertex needs n >= 1");
  if (lower_.size() != static_cast<std::size_t>(n) * (n - 1) / 2)
    throw std::invalid_argument("wrong number of sub-diagonal entries");
  bool primitive = false;
  for (int i = 0; i < n; ++i) {
    if (exponents_[i] < 0) throw std::invalid_argument("negative vertex exponent");
    if (exponents_[i] == 0) primitive = true;
  }
  for (int i = 1; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const auto& e = lower_[lower_index(i, j)];
      if (e.size() != static_cast<std::size_t>(exponents_[i]))
        throw std::invalid_argument("sub-diagonal entry not reduced modulo its diagonal");
      for (auto c : e)
        if (c >= field_.modulus()) throw std::invalid_argument("coefficient out of range");
      if (!e.empty() && e[0] != 0) primitive = true;
    }
  if (!primitive) throw std::invalid_argument("vertex lattice is not homothety-normalized");
}

BuildingVertex BuildingVertex::standard(PrimeField field, int n) {
  return BuildingVertex(field, std::vector<int>(n, 0),
                        std::vector<std::vector<Residue>>(static_cast<std::size_t>(n) * (n - 1) / 2));
}

BuildingVertex BuildingVertex::from_coweight(PrimeField field, const roots::Coweight& x) {
  const auto& a = x.exponents;
  if (a.empty()) throw std::invalid_argument("empty coweight");
  const int top = *std::max_element(a.begin(), a.end());
  const int n = static_cast<int>(a.size());
  std::vector<int> exps(n);
  std::vector<std::vector<Residue>> lower;
  for (int i = 0; i < n; ++i) {
    exps[i] = top - a[i];
    for (int j = 0; j < i; ++j) lower.emplace_back(exps[i], 0);
  }
  return BuildingVertex(field, std::move(exps), std::move(lower));
}

const std::vector<Residue>& BuildingVertex::lower(int i, int j) const {
  if (i <= j || i >= size() || j < 0) throw std::out_of_range("lower() needs i > j");
  return lower_[lower_index(i, j)];
}

bool BuildingVertex::is_diagonal() const {
  return std::all_of(lower_.begin(), lower_.end(), [](const auto& e) {
    return std::all_of(e.begin(), e.end(), [](Residue c) { return c == 0; });
  });
}

int BuildingVertex::type() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0) % size();
}

namespace {

RationalFunction s_series_to_rational(const PrimeField& F, const std::vector<Residue>& coeffs) {
  // sum c_k t^{-k} = (sum c_k t^{K-k}) / t^K
  if (coeffs.empty()) return RationalFunction(F);
  const int K = static_cast<int>(coeffs.size()) - 1;
  std::vector<Residue> num(K + 1, 0);
  for (int k = 0; k <= K; ++k) num[K - k] = coeffs[k];
  return poly::rat_normalize(Polynomial(F, std::move(num)), Polynomial::monomial(F, 1, K));
}

BuildingVertex from_hermite(const PrimeField& F, lattice::HermiteForm h) {
  return BuildingVertex(F, std::move(h.exponents), std::move(h.lower));
}

// The vertex basis as a series matrix of the given precision.
void load_basis(SeriesMatrix& m, const BuildingVertex& v, int col_offset, int shift) {
  const int n = v.size();
  const int prec = m.precision();
  for (int j = 0; j < n; ++j) {
    const int d = v.exponents()[j] + shift;
    if (d < prec) m.entry(j, col_offset + j)[d] = 1;
    for (int i = j + 1; i < n; ++i) {
      const auto& e = v.lower(i, j);
      for (std::size_t k = 0; k < e.size() && static_cast<int>(k) + shift < prec; ++k)
        m.entry(i, col_offset + j)[k + shift] = e[k];
    }
  }
}

int exponent_sum(const BuildingVertex& v) {
  return std::accumulate(v.exponents().begin(), v.exponents().end(), 0);
}

}  // namespace

RatMatrix BuildingVertex::representative() const {
  const int n = size();
  RatMatrix m(field_, n);
  for (int i = 0; i < n; ++i) {
    std::vector<Residue> diag(exponents_[i] + 1, 0);
    diag.back() = 1;
    m(i, i) = s_series_to_rational(field_, diag);
    for (int j = 0; j < i; ++j) m(i, j) = s_series_to_rational(field_, lower(i, j));
  }
  return m;
}

std::string BuildingVertex::key() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) os << (i ? "," : "") << exponents_[i];
  os << ')';
  for (int i = 1; i < size(); ++i)
    for (int j = 0; j < i; ++j) {
      const auto& e = lower(i, j);
      if (std::all_of(e.begin(), e.end(), [](Residue c) { return c == 0; })) continue;
      os << '[' << i + 1 << ',' << j + 1 << ':';
      for (std::size_t k = 0; k < e.size(); ++k) os << (k ? "." : "") << e[k];
      os << ']';
    }
  return os.str();
}

BuildingSimplex make_simplex(std::vector<BuildingVertex> vertices) {
  if (vertices.empty()) throw std::invalid_argument("empty simplex");
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
    throw std::invalid_argument("simplex with repeated vertex");
  return BuildingSimplex{std::move(vertices)};
}

BuildingVertex canonical_form(const RatMatrix& m) {
  const int n = m.size();
  const PrimeField& F = m.field();
  RationalFunction det = m.determinant();
  if (det.is_zero()) throw std::invalid_argument("canonical form of a singular matrix");
  int min_val = std::numeric_limits<int>::max();
  for (const auto& e : m.entries())
    if (!e.is_zero()) min_val = std::min(min_val, poly::omega_infty(e));
  const int c = -min_val;
  const long prec = static_cast<long>(n) * c + poly::omega_infty(det) + 1;
  if (prec > lattice::kMaxPrecision)
    throw PrecisionError("canonical form needs precision " + std::to_string(prec));
  SeriesMatrix sm(F, n, n, static_cast<int>(prec));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& f = m(i, j);
      if (f.is_zero()) continue;
      const int shift = poly::omega_infty(f) + c;
      if (shift >= prec) continue;
      const auto& P = f.numerator();
      const auto& Q = f.denominator();
      auto u = lattice::series_quotient(F, P.reversed(P.degree()), Q.reversed(Q.degree()),
                                        static_cast<int>(prec) - shift);
      std::copy(u.begin(), u.end(), sm.entry(i, j) + shift);
    }
  return from_hermite(F, lattice::hermite_reduce(std::move(sm)));
}

BuildingVertex act(const chevalley::GroupElement& g, const BuildingVertex& v) {
  if (g.size() != v.size()) throw std::invalid_argument("group element and vertex sizes differ");
  return canonical_form(g.matrix() * v.representative());
}

BuildingVertex act(const PolyMatrix& g, const BuildingVertex& v) {
  const int n = v.size();
  if (g.size() != n) throw std::invalid_argument("group element and vertex sizes differ");
  const PrimeField& F = v.field();
  const int D = max_degree(g);
  if (D < 0) throw std::invalid_argument("act with the zero matrix");
  const long prec = static_cast<long>(n) * D + exponent_sum(v) + 1;
  if (prec > lattice::kMaxPrecision)
    throw PrecisionError("action needs precision " + std::to_string(prec));
  const int N = static_cast<int>(prec);
  // s^D g(1/s): entry coefficients reversed against the common width D.
  std::vector<std::vector<Residue>> gs(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (!g(i, k).is_zero()) gs[i * n + k] = g(i, k).reversed(D);
  SeriesMatrix basis(F, n, n, N);
  load_basis(basis, v, 0, 0);
  SeriesMatrix prod(F, n, n, N);
  const std::uint32_t q = F.modulus();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Residue* out = prod.entry(i, j);
      for (int k = j; k < n; ++k) {
        const auto& a = gs[i * n + k];
        if (a.empty()) continue;
        const Residue* b = basis.entry(k, j);
        for (std::size_t x = 0; x < a.size() && static_cast<int>(x) < N; ++x) {
          if (a[x] == 0) continue;
          for (int y = 0; static_cast<int>(x) + y < N; ++y)
            if (b[y] != 0)
              out[x + y] = F.add(out[x + y], static_cast<Residue>(std::uint64_t{a[x]} * b[y] % q));
        }
      }
    }
  return from_hermite(F, lattice::hermite_reduce(std::move(prod)));
}

BuildingSimplex act(const PolyMatrix& g, const BuildingSimplex& s) {
  std::vector<BuildingVertex> out;
  out.reserve(s.vertices.size());
  for (const auto& v : s.vertices) out.push_back(act(g, v));
  return make_simplex(std::move(out));
}

namespace {

// Row-reduced bases of every proper nonzero subspace of F_q^n.
std::vector<std::vector<std::vector<Residue>>> proper_subspaces(int n, std::uint32_t q) {
  std::vector<std::vector<std::vector<Residue>>> out;
  for (int k = 1; k < n; ++k) {
    std::vector<int> pivots(k);
    std::iota(pivots.begin(), pivots.end(), 0);
    while (true) {
      // Free positions: (row r, column c) with c > pivots[r] and c not a pivot.
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::size_t total = 1;
      for (std::size_t f = 0; f < free.size(); ++f) total *= q;
      for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::vector<Residue>> basis(k, std::vector<Residue>(n, 0));
        for (int r = 0; r < k; ++r) basis[r][pivots[r]] = 1;
        std::size_t x = code;
        for (auto [r, c] : free) {
          basis[r][c] = static_cast<Residue>(x % q);
          x /= q;
        }
        out.push_back(std::move(basis));
      }
      int idx = k - 1;
      while (idx >= 0 && pivots[idx] == n - k + idx) --idx;
      if (idx < 0) break;
      ++pivots[idx];
      for (int r = idx + 1; r < k; ++r) pivots[r] = pivots[r - 1] + 1;
    }
  }
  return out;
}

}  // namespace

std::size_t neighbor_count(int n, std::uint32_t q) {
  // sum over 0 < k < n of the Gaussian binomial [n choose k]_q
  auto gauss = [&](int nn, int k) {
    long double num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
      num *= (std::pow(static_cast<long double>(q), nn - i) - 1);
      den *= (std::pow(static_cast<long double>(q), i + 1) - 1);
    }
    return static_cast<std::size_t>(num / den + 0.5L);
  };
  std::size_t total = 0;
  for (int k = 1; k < n; ++k) total += gauss(n, k);
  return total;
}

std::vector<BuildingVertex> neighbors(const BuildingVertex& v) {
  const int n = v.size();
  const PrimeField& F = v.field();
  const int base = exponent_sum(v);
  std::vector<BuildingVertex> out;
  for (const auto& basis : proper_subspaces(n, F.modulus())) {
    const int k = static_cast<int>(basis.size());
    const int N = base + (n - k) + 1;
    SeriesMatrix full(F, n, n, N);
    load_basis(full, v, 0, 0);
    SeriesMatrix gen(F, n, k + n, N);
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < n; ++c) {
        const Residue w = basis[r][c];
        if (w == 0) continue;
        for (int i = 0; i < n; ++i) {
          const Residue* src = full.entry(i, c);
          Residue* dst = gen.entry(i, r);
          for (int d = 0; d < N; ++d) dst[d] = F.add(dst[d], F.mul(w, src[d]));
        }
      }
    load_basis(gen, v, k, 1);
    out.push_back(from_hermite(F, lattice::hermite_reduce(std::move(gen))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool adjacent(const BuildingVertex& a, const BuildingVertex& b) {
  if (a == b) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::optional<int> Ball::index_of(const BuildingVertex& v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  if (it == vertices.end() || !(*it == v)) return std::nullopt;
  return static_cast<int>(it - vertices.begin());
}

BuildingSimplex Ball::simplex(std::size_t k) const {
  std::vector<BuildingVertex> vs;
  for (int i : simplices.at(k)) vs.push_back(vertices[i]);
  return BuildingSimplex{std::move(vs)};
}

std::size_t Ball::count_of_dimension(int dim) const {
  return static_cast<std::size_t>(std::count_if(simplices.begin(), simplices.end(), [&](const auto& s) {
    return static_cast<int>(s.size()) == dim + 1;
  }));
}

Ball ball(const BuildingVertex& center, int radius, const BallOptions& options) {
  if (radius < 0) throw std::invalid_argument("ball radius must be nonnegative");
  std::vector<BuildingVertex> found{center};
  std::vector<int> dist{0};
  std::unordered_map<BuildingVertex, int> index{{center, 0}};
  std::vector<std::vector<BuildingVertex>> nbrs;  // per found vertex, once expanded
  std::size_t expanded = 0;
  auto expand_upto = [&](std::size_t end) {
    auto lists = parallel_map(options.workers, end - expanded,
                              [&](std::size_t k) { return neighbors(found[expanded + k]); });
    for (auto& l : lists) nbrs.push_back(std::move(l));
    expanded = end;
  };
  std::size_t layer_begin = 0;
  for (int d = 0; d <= radius; ++d) {
    const std::size_t layer_end = found.size();
    expand_upto(layer_end);
    if (d == radius) break;
    for (std::size_t k = layer_begin; k < layer_end; ++k)
      for (const auto& w : nbrs[k]) {
        if (index.count(w)) continue;
        if (found.size() >= options.vertex_budget)
          throw BudgetExceeded("ball exceeds the vertex budget of " +
                               std::to_string(options.vertex_budget));
        index.emplace(w, static_cast<int>(found.size()));
        found.push_back(w);
        dist.push_back(d + 1);
      }
    layer_begin = layer_end;
  }

  // Re-index by canonical order.
  std::vector<int> order(found.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return found[a] < found[b]; });
  std::vector<int> rank(found.size());
  for (std::size_t k = 0; k < order.size(); ++k) rank[order[k]] = static_cast<int>(k);

  Ball out{center, radius, {}, {}, {}, {}};
  out.vertices.reserve(found.size());
  for (int k : order) {
    out.vertices.push_back(found[k]);
    out.distance.push_back(dist[k]);
  }
  out.adjacency.resize(found.size());
  for (std::size_t k = 0; k < found.size(); ++k) {
    auto& adj = out.adjacency[rank[k]];
    for (const auto& w : nbrs[k]) {
      auto it = index.find(w);
      if (it != index.end()) adj.push_back(rank[it->second]);
    }
    std::sort(adj.begin(), adj.end());
  }

  // Simplices are the cliques of the adjacency graph (the building is a flag complex).
  const int n = center.size();
  std::vector<std::vector<std::vector<int>>> by_dim(n);
  std::function<void(std::vector<int>&, const std::vector<int>&)> grow =
      [&](std::vector<int>& clique, const std::vector<int>& candidates) {
        by_dim[clique.size() - 1].push_back(clique);
        if (static_cast<int>(clique.size()) == n) return;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
          const int w = candidates[c];
          std::vector<int> next;
          const auto& aw = out.adjacency[w];
          std::set_intersection(candidates.begin() + c + 1, candidates.end(), aw.begin(), aw.end(),
                                std::back_inserter(next));
          clique.push_back(w);
          grow(clique, next);
          clique.pop_back();
        }
      };
  for (int v = 0; v < static_cast<int>(out.vertices.size()); ++v) {
    std::vector<int> higher;
    for (int w : out.adjacency[v])
      if (w > v) higher.push_back(w);
    std::vector<int> clique{v};
    grow(clique, higher);
  }
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end());
    for (auto& s : level) out.simplices.push_back(std::move(s));
  }
  return out;
}

std::string to_dot(const Ball& b) {
  std::ostringstream os;
  os << "graph ball {\n";
  os << "  node [shape=circle, fontsize=9];\n";
  for (std::size_t k = 0; k < b.vertices.size(); ++k)
    os << "  v" << k << " [label=\"" << b.vertices[k].key() << "\", dist=" << b.distance[k] << "];\n";
  for (std::size_t k = 0; k < b.vertices.size(); ++k)
    for (int w : b.adjacency[k])
      if (static_cast<std::size_t>(w) > k) os << "  v" << k << " -- v" << w << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sectorlab::building

std::size_t std::hash<sectorlab::building::BuildingVertex>::operator()(
    const sectorlab::building::BuildingVertex& v) const noexcept {
  std::size_t h = v.exponents().size();
  for (int e : v.exponents()) h = h * 31 + static_cast<std::size_t>(e);
  for (int i = 1; i < v.size(); ++i)
    for (int j = 0; j < i; ++j)
      for (auto c : v.lower(i, j)) h = h * 1000003u ^ c;
  return h;
}

#include "sectorlab/sector.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "sectorlab/chevalley.hpp"
#include "sectorlab/errors.hpp"
#include "sectorlab/parallel.hpp"

namespace sectorlab::sector {

using roots::Coweight;

int SectorSimplex::reach() const {
  int top = 0;
  for (const auto& v : vertices) top = std::max(top, v.exponents.front());
  return top;
}

std::string SectorSimplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    os << (k ? " " : "") << '(';
    const auto& a = vertices[k].exponents;
    for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
    os << ')';
  }
  os << '}';
  return os.str();
}

std::vector<Coweight> sector_vertices(int n, int r) {
  if (n < 1) throw std::invalid_argument("sector needs n >= 1");
  if (r < 0) throw std::invalid_argument("sector radius must be nonnegative");
  std::vector<Coweight> out;
  std::vector<int> a(n, 0);
  // Enumerate non-increasing sequences with a_n = 0 and a_1 <= r.
  std::function<void(int, int)> rec = [&](int pos, int cap) {
    if (pos == n - 1) {
      a[pos] = 0;
      out.push_back(Coweight{a});
      return;
    }
    for (int v = 0; v <= cap; ++v) {
      a[pos] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, r);
  std::sort(out.begin(), out.end());
  return out;
}

bool sector_adjacent(const Coweight& x, const Coweight& y) {
  if (x.size() != y.size()) throw std::invalid_argument("coweight size mismatch");
  int lo = y.exponents[0] - x.exponents[0], hi = lo;
  for (std::size_t i = 1; i < x.size(); ++i) {
    const int d = y.exponents[i] - x.exponents[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo == 1;
}

std::vector<SectorSimplex> sector_simplices(int n, int r) {
  const auto verts = sector_vertices(n, r);
  const int m = static_cast<int>(verts.size());
  std::vector<std::vector<int>> adj(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (sector_adjacent(verts[a], verts[b])) adj[a].push_back(b);
  std::vector<std::vector<SectorSimplex>> by_dim(n);
  std::vector<int> clique;
  std::function<void(const std::vector<int>&)> grow = [&](const std::vector<int>& cand) {
    SectorSimplex s;
    for (int k : clique) s.vertices.push_back(verts[k]);
    by_dim[clique.size() - 1].push_back(std::move(s));
    if (static_cast<int>(clique.size()) == n) return;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      std::vector<int> next;
      std::set_intersection(cand.begin() + c + 1, cand.end(), adj[cand[c]].begin(),
                            adj[cand[c]].end(), std::back_inserter(next));
      clique.push_back(cand[c]);
      grow(next);
      clique.pop_back();
    }
  };
  for (int v = 0; v < m; ++v) {
    clique = {v};
    grow(adj[v]);
  }
  std::vector<SectorSimplex> out;
  for (auto& level : by_dim) {
    std::sort(level.begin(), level.end());
    for (auto& s : level) out.push_back(std::move(s));
  }
  return out;
}

building::BuildingSimplex to_building(const SectorSimplex& s, poly::PrimeField field) {
  std::vector<building::BuildingVertex> vs;
  for (const auto& x : s.vertices) vs.push_back(building::BuildingVertex::from_coweight(field, x));
  return building::make_simplex(std::move(vs));
}

StabilizerDescription::StabilizerDescription(int n, std::vector<int> bounds)
    : n_(n), bounds_(std::move(bounds)) {
  if (n < 1 || bounds_.size() != static_cast<std::size_t>(n) * n)
    throw std::invalid_argument("bounds must form an n x n table");
  for (int i = 0; i < n; ++i)
    if (bound(i, i) != 0) throw std::invalid_argument("diagonal bounds must be 0");
}

std::vector<roots::Root> StabilizerDescription::levi_roots() const {
  std::vector<roots::Root> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (is_levi(i, j)) out.push_back(roots::type_a_root(n_, i, j));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<roots::Root, int>> StabilizerDescription::root_bounds() const {
  std::vector<std::pair<roots::Root, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j) out.emplace_back(roots::type_a_root(n_, i, j), bound(i, j));
  return out;
}

int StabilizerDescription::unipotent_log_order() const {
  int total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && allows(i, j) && !is_levi(i, j)) total += bound(i, j) + 1;
  return total;
}

bool StabilizerDescription::fits(const PolyMatrix& g) const {
  if (g.size() != n_) return false;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      const auto& e = g(i, j);
      if (e.is_zero()) continue;
      if (e.degree() > bound(i, j)) return false;
    }
  return true;
}

StabilizerDescription predict_stabilizer(const Coweight& x) {
  const int n = static_cast<int>(x.size());
  std::vector<int> b(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b[i * n + j] = roots::pairing(roots::type_a_root(n, i, j), x);
  return StabilizerDescription(n, std::move(b));
}

StabilizerDescription intersect(const StabilizerDescription& a, const StabilizerDescription& b) {
  if (a.n() != b.n()) throw std::invalid_argument("description size mismatch");
  const int n = a.n();
  std::vector<int> out(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i * n + j] = std::min(a.bound(i, j), b.bound(i, j));
  return StabilizerDescription(n, std::move(out));
}

StabilizerDescription predict_stabilizer(const SectorSimplex& sigma) {
  if (sigma.vertices.empty()) throw std::invalid_argument("empty sector simplex");
  StabilizerDescription d = predict_stabilizer(sigma.vertices.front());
  for (std::size_t k = 1; k < sigma.vertices.size(); ++k)
    d = intersect(d, predict_stabilizer(sigma.vertices[k]));
  return d;
}

StratumLabel stratum_label(const SectorSimplex& sigma) {
  StratumLabel label;
  const int n = sigma.n();
  for (int k = 0; k + 1 < n; ++k) {
    const auto alpha = roots::type_a_root(n, k, k + 1);
    for (const auto& x : sigma.vertices)
      if (roots::pairing(alpha, x) > 0) {
        label.nonvanishing.push_back(k);
        break;
      }
  }
  return label;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

std::string simplex_key(const building::Ball& w, const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? " " : "") + w.vertices[s[k]].key();
  return out + "}";
}

// Position of an index tuple in the ball's simplex list (sorted by size, then lexicographic).
int find_simplex(const std::vector<std::vector<int>>& simplices, const std::vector<int>& s) {
  auto cmp = [](const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  auto it = std::lower_bound(simplices.begin(), simplices.end(), s, cmp);
  if (it == simplices.end() || *it != s) return -1;
  return static_cast<int>(it - simplices.begin());
}

}  // namespace

DomainReport verify_fundamental_domain(const DomainOptions& opt) {
  if (opt.n < 2) throw std::invalid_argument("n must be at least 2");
  if (opt.r < 0 || opt.gen_degree < 0 || opt.window_slack < 0)
    throw std::invalid_argument("radius, generator degree and slack must be nonnegative");
  const poly::PrimeField F(opt.q);
  DomainReport rep;
  rep.options = opt;
  rep.window_radius = opt.r + opt.window_slack;

  const auto origin = building::BuildingVertex::standard(F, opt.n);
  const auto window = building::ball(origin, rep.window_radius, {opt.vertex_budget, opt.workers});
  const auto gens = chevalley::elementary_generators(opt.n, F, opt.gen_degree);
  rep.generator_count = gens.size();
  const std::size_t nv = window.vertices.size();
  const std::size_t ns = window.simplices.size();

  std::vector<char> in_ball(ns, 1);
  for (std::size_t k = 0; k < ns; ++k)
    for (int v : window.simplices[k])
      if (window.distance[v] > opt.r) in_ball[k] = 0;
  rep.ball_vertices = static_cast<std::size_t>(
      std::count_if(window.distance.begin(), window.distance.end(), [&](int d) { return d <= opt.r; }));
  rep.ball_simplices_by_dimension.assign(opt.n, 0);
  for (std::size_t k = 0; k < ns; ++k)
    if (in_ball[k]) ++rep.ball_simplices_by_dimension[window.simplices[k].size() - 1];

  // Sector simplices present in the window, mapped to window simplex ids.
  std::vector<int> sector_ids;
  std::vector<std::string> sector_names;
  for (const auto& s : sector_simplices(opt.n, rep.window_radius)) {
    std::vector<int> idx;
    for (const auto& x : s.vertices) {
      auto i = window.index_of(building::BuildingVertex::from_coweight(F, x));
      if (!i) break;
      idx.push_back(*i);
    }
    if (idx.size() != s.vertices.size()) continue;
    std::sort(idx.begin(), idx.end());
    const int id = find_simplex(window.simplices, idx);
    if (id < 0) throw InvariantViolation("sector simplex missing from the ball: " + s.to_string());
    sector_ids.push_back(id);
    sector_names.push_back(s.to_string());
  }
  rep.sector_simplex_count = sector_ids.size();

  // Action of every generator on the window vertices (-1 when the image leaves it).
  if (gens.size() * nv > opt.max_orbit_steps) {
    rep.budget_exhausted = true;
    rep.status = Status::Inconclusive;
    return rep;
  }
  auto table = parallel_map(opt.workers, gens.size(), [&](std::size_t g) {
    std::vector<int> row(nv, -1);
    for (std::size_t v = 0; v < nv; ++v) {
      auto w = building::act(gens[g], window.vertices[v]);
      if (auto i = window.index_of(w)) row[v] = *i;
    }
    return row;
  });
  rep.orbit_steps = gens.size() * nv;

  UnionFind uf(ns);
  std::vector<int> image;
  for (std::size_t k = 0; k < ns && !rep.budget_exhausted; ++k) {
    for (const auto& row : table) {
      if (rep.orbit_steps >= opt.max_orbit_steps) {
        rep.budget_exhausted = true;
        break;
      }
      ++rep.orbit_steps;
      image.clear();
      bool inside = true;
      for (int v : window.simplices[k]) {
        if (row[v] < 0) {
          inside = false;
          break;
        }
        image.push_back(row[v]);
      }
      if (!inside) continue;
      std::sort(image.begin(), image.end());
      const int id = find_simplex(window.simplices, image);
      if (id < 0) throw InvariantViolation("generator image of a simplex is not a simplex");
      uf.unite(static_cast<int>(k), id);
    }
  }

  // Classes: root -> sector simplices it contains.
  std::vector<std::vector<int>> sectors_of_root(ns);
  for (std::size_t s = 0; s < sector_ids.size(); ++s)
    sectors_of_root[uf.find(sector_ids[s])].push_back(static_cast<int>(s));
  std::vector<std::size_t> members(ns, 0);
  std::size_t in_ball_total = 0;
  for (std::size_t k = 0; k < ns; ++k) {
    if (!in_ball[k]) continue;
    ++in_ball_total;
    const int root = uf.find(static_cast<int>(k));
    if (sectors_of_root[root].empty()) {
      rep.unreached.push_back(simplex_key(window, window.simplices[k]));
    } else {
      ++rep.covered;
      ++members[root];
    }
  }
  for (std::size_t s = 0; s < sector_ids.size(); ++s) {
    const int root = uf.find(sector_ids[s]);
    const auto& group = sectors_of_root[root];
    if (group.front() != static_cast<int>(s)) continue;
    if (group.size() > 1) {
      std::string d;
      for (std::size_t k = 0; k < group.size(); ++k) d += (k ? " ~ " : "") + sector_names[group[k]];
      rep.duplicates.push_back(d);
    }
    if (sector_ids[s] >= 0 && in_ball[sector_ids[s]])
      rep.classes.push_back({sector_names[s], members[root]});
  }
  rep.coverage_fraction =
      in_ball_total == 0 ? 1.0 : static_cast<double>(rep.covered) / static_cast<double>(in_ball_total);

  if (!rep.duplicates.empty())
    rep.status = Status::Fail;
  else if (!rep.unreached.empty() || rep.budget_exhausted)
    rep.status = Status::Inconclusive;
  else
    rep.status = Status::Pass;
  return rep;
}

}  // namespace sectorlab::sector

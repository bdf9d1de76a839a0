#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sectorlab/building.hpp"
#include "sectorlab/chevalley.hpp"
#include "sectorlab/errors.hpp"
#include "sectorlab/homology.hpp"
#include "sectorlab/parallel.hpp"
#include "sectorlab/rootsys.hpp"
#include "sectorlab/sector.hpp"
#include "sectorlab/simpalg.hpp"
#include "sectorlab/stabilizers.hpp"

namespace sectorlab::cli {

using json = nlohmann::ordered_json;
using sector::Status;

namespace {

Status worst(Status a, Status b) {
  auto rank = [](Status s) { return s == Status::Fail ? 2 : s == Status::Inconclusive ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return kExitPass;
    case Status::Fail: return kExitFail;
    case Status::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

struct Section {
  Status status = Status::Pass;
  json parameters = json::object();
  json result = json::object();
  std::vector<std::string> lines;
};

json invariants_json(const stabilizers::AbelianInvariants& a) {
  json out = json::array();
  for (auto d : a.invariant_factors) out.push_back(d);
  return out;
}

std::string join_sizes(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "/" : "") + std::to_string(v[k]);
  return s;
}

// ---------------------------------------------------------------------------

Section rootsys_info(const RunConfig& c) {
  Section s;
  const auto family = roots::parse_family(c.family);
  s.parameters = {{"family", c.family}, {"rank", c.rank}};
  const auto rs = roots::generate_roots(family, c.rank);
  const std::size_t expected = family == roots::Family::A
                                   ? static_cast<std::size_t>(c.rank) * (c.rank + 1)
                                   : 2u * static_cast<std::size_t>(c.rank) * (c.rank - 1);
  json simples = json::array(), mult = json::array(), positive = json::array();
  for (const auto& a : rs.simples()) {
    simples.push_back(a.coords);
    mult.push_back(roots::multiplicity_in_highest(rs, a));
  }
  for (const auto& a : rs.roots())
    if (rs.is_positive(a)) positive.push_back(a.coords);
  s.result = {{"ambient_dimension", rs.ambient_dim()},
              {"root_count", rs.roots().size()},
              {"expected_root_count", expected},
              {"simple_roots", simples},
              {"highest_root", roots::highest_root(rs).coords},
              {"highest_root_multiplicities", mult},
              {"positive_roots", positive}};
  if (rs.roots().size() != expected) s.status = Status::Fail;
  s.lines.push_back("rootsys " + c.family + std::to_string(c.rank) + ": " +
                    std::to_string(rs.roots().size()) + " roots");
  return s;
}

Section bn_check(const RunConfig& c) {
  Section s;
  s.parameters = {{"n", c.n}, {"q", c.q}, {"degenerate_borel", c.degenerate}};
  const poly::PrimeField F(c.q);
  const auto data = c.degenerate ? chevalley::degenerate_tits_system(c.n, F)
                                 : chevalley::spherical_tits_system(c.n, F);
  const auto rep = chevalley::check_bn_axioms(data, c.workers);
  std::size_t bn1_fail = 0;
  for (const auto& r : rep.bn1) bn1_fail += r.holds ? 0 : 1;
  json bn2 = json::array();
  for (bool b : rep.bn2) bn2.push_back(b);
  s.result = {{"label", rep.label},
              {"group_order", rep.group_order},
              {"borel_order", rep.borel_order},
              {"normalizer_order", rep.normalizer_order},
              {"torus_order", rep.torus_order},
              {"weyl_order", rep.weyl_order},
              {"structural_failures", rep.structural_failures},
              {"bn1_checked", rep.bn1.size()},
              {"bn1_failures", bn1_fail},
              {"bn2_per_reflection", bn2},
              {"axioms_hold", rep.pass}};
  s.status = rep.pass ? Status::Pass : Status::Fail;
  s.lines.push_back("bn-check " + rep.label + ": " + (rep.pass ? "axioms hold" : "axioms fail"));
  return s;
}

Section building_ball(const RunConfig& c, std::string* dot) {
  Section s;
  s.parameters = {{"n", c.n}, {"q", c.q}, {"r", c.r}, {"vertex_budget", c.vertex_budget}};
  const poly::PrimeField F(c.q);
  const auto b = building::ball(building::BuildingVertex::standard(F, c.n), c.r, {c.vertex_budget, c.workers});
  std::vector<std::size_t> counts;
  for (int d = 0; d < c.n; ++d) counts.push_back(b.count_of_dimension(d));
  const std::size_t expect_deg = building::neighbor_count(c.n, c.q);
  std::size_t bad_degree = 0;
  json vertices = json::array();
  for (std::size_t k = 0; k < b.vertices.size(); ++k) {
    if (b.distance[k] < c.r && b.adjacency[k].size() != expect_deg) ++bad_degree;
    vertices.push_back({{"key", b.vertices[k].key()}, {"distance", b.distance[k]}, {"type", b.vertices[k].type()}});
  }
  s.result = {{"vertex_count", b.vertices.size()},
              {"simplices_by_dimension", counts},
              {"interior_degree_expected", expect_deg},
              {"interior_degree_violations", bad_degree}};
  if (bad_degree) s.status = Status::Fail;
  if (c.n == 2) {
    const bool tree = counts.size() > 1 && counts[1] + 1 == counts[0];
    s.result["tree_edge_count_ok"] = tree;
    if (!tree) s.status = Status::Fail;
  }
  s.result["vertices"] = vertices;
  if (dot) *dot = building::to_dot(b);
  s.lines.push_back("building ball n=" + std::to_string(c.n) + " q=" + std::to_string(c.q) +
                    " r=" + std::to_string(c.r) + ": simplices by dimension " + join_sizes(counts));
  return s;
}

Section domain_verify(const RunConfig& c) {
  Section s;
  sector::DomainOptions o;
  o.n = c.n;
  o.q = c.q;
  o.r = c.r;
  o.gen_degree = c.gen_degree.value_or(c.r + 1);
  o.max_orbit_steps = c.max_orbit_steps;
  o.window_slack = c.window_slack;
  o.vertex_budget = c.vertex_budget;
  o.workers = c.workers;
  s.parameters = {{"n", o.n},
                  {"q", o.q},
                  {"r", o.r},
                  {"gen_degree", o.gen_degree},
                  {"max_orbit_steps", o.max_orbit_steps},
                  {"window_slack", o.window_slack}};
  const auto rep = sector::verify_fundamental_domain(o);
  json classes = json::array();
  for (const auto& k : rep.classes) classes.push_back({{"sector_simplex", k.sector}, {"ball_members", k.ball_members}});
  s.result = {{"scope", "finite coefficient field F_q; elementary generators of bounded degree; ball-restricted orbits"},
              {"window_radius", rep.window_radius},
              {"generator_count", rep.generator_count},
              {"ball_vertices", rep.ball_vertices},
              {"ball_simplices_by_dimension", rep.ball_simplices_by_dimension},
              {"sector_simplices_in_window", rep.sector_simplex_count},
              {"orbit_steps", rep.orbit_steps},
              {"budget_exhausted", rep.budget_exhausted},
              {"coverage_fraction", rep.coverage_fraction},
              {"duplicates", rep.duplicates},
              {"unreached", rep.unreached},
              {"classes", classes},
              {"status", sector::to_string(rep.status)}};
  s.status = rep.status;
  std::ostringstream line;
  line << "domain verify n=" << o.n << " q=" << o.q << " r=" << o.r << " gen_degree=" << o.gen_degree << ": "
       << sector::to_string(rep.status) << " (coverage " << rep.covered << "/"
       << rep.covered + rep.unreached.size() << ", duplicates " << rep.duplicates.size() << ")";
  s.lines.push_back(line.str());
  return s;
}

struct StabRecord {
  json record;
  Status status = Status::Pass;
};

Section stab_verify(const RunConfig& c) {
  Section s;
  const int search_degree = c.search_degree.value_or(c.r);
  s.parameters = {{"n", c.n}, {"q", c.q}, {"r", c.r}, {"search_degree", search_degree}};
  const poly::PrimeField F(c.q);
  const auto simplices = sector::sector_simplices(c.n, c.r);
  auto records = parallel_map(c.workers, simplices.size(), [&](std::size_t k) {
    StabRecord out;
    const auto& sigma = simplices[k];
    const auto desc = sector::predict_stabilizer(sigma);
    const auto gamma = stabilizers::realize_stabilizer(desc, F);
    stabilizers::BruteOptions bo;
    bo.search_degree = search_degree;
    const auto brute = stabilizers::brute_stabilizer(sector::to_building(sigma, F), bo);
    const bool agree = gamma.same_elements(brute.group);
    const auto ext = stabilizers::extension_check(gamma, desc);
    const auto U = stabilizers::unipotent_part(gamma, desc);
    const auto L = stabilizers::levi_part(gamma, desc);
    const auto lcs = stabilizers::lower_central_series(U);
    json bounds = json::array();
    for (const auto& [root, b] : desc.root_bounds())
      if (b >= 0) bounds.push_back({{"root", root.coords}, {"bound", b}});
    json levi = json::array();
    for (const auto& root : desc.levi_roots()) levi.push_back(root.coords);
    out.record = {{"simplex", sigma.to_string()},
                  {"stratum", stratum_label(sigma).nonvanishing},
                  {"levi_roots", levi},
                  {"allowed_root_bounds", bounds},
                  {"predicted_order", gamma.order()},
                  {"brute_order", brute.group.order()},
                  {"brute_lower_bound_only", brute.lower_bound_only},
                  {"agree", agree},
                  {"unipotent_order", ext.unipotent_order},
                  {"levi_order", ext.levi_order},
                  {"extension_ok", ext.ok()},
                  {"extension_violations", ext.violations},
                  {"lcs_length", lcs.length},
                  {"abelian_invariants_gamma", invariants_json(stabilizers::abelian_invariants(gamma))},
                  {"abelian_invariants_levi", invariants_json(stabilizers::abelian_invariants(L))}};
    if (!agree && !brute.lower_bound_only) out.status = Status::Fail;
    else if (brute.lower_bound_only) out.status = Status::Inconclusive;
    if (!ext.ok()) out.status = Status::Fail;
    return out;
  });
  json recs = json::array();
  std::size_t agreeing = 0, ext_ok = 0;
  for (auto& r : records) {
    s.status = worst(s.status, r.status);
    agreeing += r.record["agree"].get<bool>() ? 1 : 0;
    ext_ok += r.record["extension_ok"].get<bool>() ? 1 : 0;
    recs.push_back(std::move(r.record));
  }
  // Simplices sharing a stratum label must share their Levi roots.
  std::map<std::vector<int>, std::vector<roots::Root>> levi_by_label;
  std::size_t stratum_conflicts = 0;
  for (const auto& sigma : simplices) {
    auto label = sector::stratum_label(sigma).nonvanishing;
    auto levi = sector::predict_stabilizer(sigma).levi_roots();
    auto [it, fresh] = levi_by_label.emplace(label, levi);
    if (!fresh && it->second != levi) ++stratum_conflicts;
  }
  if (stratum_conflicts) s.status = Status::Fail;

  // Torus conjugation weights for every root and every coweight with entries in [-2, 2].
  std::size_t weight_checks = 0, weight_failures = 0;
  std::vector<int> lambda(c.n, -2);
  while (true) {
    int sum = 0;
    for (int v : lambda) sum += v;
    if (sum == 0)
      for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
          if (i == j) continue;
          ++weight_checks;
          if (chevalley::torus_conjugation_weight(F, roots::Coweight{lambda}, i, j) != lambda[i] - lambda[j])
            ++weight_failures;
        }
    int k = c.n - 1;
    while (k >= 0 && lambda[k] == 2) lambda[k--] = -2;
    if (k < 0) break;
    ++lambda[k];
  }
  if (weight_failures) s.status = Status::Fail;

  s.result = {{"simplex_count", simplices.size()},
              {"agreeing", agreeing},
              {"extension_ok", ext_ok},
              {"stratum_levi_conflicts", stratum_conflicts},
              {"torus_weight_checks", weight_checks},
              {"torus_weight_failures", weight_failures},
              {"note", "abelian invariants of stabilizer and Levi part are exploratory and never fail the run"},
              {"simplices", recs}};
  s.lines.push_back("stab verify n=" + std::to_string(c.n) + " q=" + std::to_string(c.q) + " r=" +
                    std::to_string(c.r) + ": " + sector::to_string(s.status) + " (" + std::to_string(agreeing) +
                    "/" + std::to_string(simplices.size()) + " agree, " + std::to_string(ext_ok) +
                    " extensions ok, torus weights " + std::to_string(weight_checks - weight_failures) + "/" +
                    std::to_string(weight_checks) + ")");
  return s;
}

json homology_json(const std::vector<homology::HomologyGroup>& hs) {
  json out = json::array();
  for (std::size_t p = 0; p < hs.size(); ++p) {
    json torsion = json::array();
    for (const auto& t : hs[p].torsion) torsion.push_back(t.str());
    out.push_back({{"degree", p}, {"betti", hs[p].betti}, {"torsion", torsion}, {"group", hs[p].to_string()}});
  }
  return out;
}

Section homology_sector(const RunConfig& c) {
  Section s;
  s.parameters = {{"n", c.n}, {"r", c.r}, {"abelian_table", c.abelian_table}};
  const auto cx = homology::sector_complex(c.n, c.r);
  const auto hs = homology::homology_groups(cx);
  std::vector<std::size_t> ranks;
  for (int p = 0; p <= cx.top_dimension(); ++p) ranks.push_back(cx.rank(p));
  bool contractible = !hs.empty() && hs[0].betti == 1 && hs[0].torsion.empty();
  for (std::size_t p = 1; p < hs.size(); ++p) contractible = contractible && hs[p].is_zero();
  const auto circle = homology::homology_groups(homology::circle_fixture());
  const bool control = circle.size() == 2 && circle[0].betti == 1 && circle[1].betti == 1 &&
                       circle[0].torsion.empty() && circle[1].torsion.empty();
  s.result = {{"chain_ranks", ranks},
              {"euler_characteristic", homology::euler_characteristic(cx)},
              {"homology", homology_json(hs)},
              {"contractible", contractible},
              {"circle_control", homology_json(circle)},
              {"circle_control_ok", control}};
  if (c.abelian_table) {
    s.parameters["q"] = c.q;
    const poly::PrimeField F(c.q);
    const auto simplices = sector::sector_simplices(c.n, c.r);
    auto rows = parallel_map(c.workers, simplices.size(), [&](std::size_t k) {
      const auto desc = sector::predict_stabilizer(simplices[k]);
      const auto gamma = stabilizers::realize_stabilizer(desc, F);
      return json{{"simplex", simplices[k].to_string()},
                  {"gamma", invariants_json(stabilizers::abelian_invariants(gamma))},
                  {"levi", invariants_json(stabilizers::abelian_invariants(stabilizers::levi_part(gamma, desc)))}};
    });
    s.result["exploratory_abelian_table"] = rows;
  }
  s.status = contractible && control ? Status::Pass : Status::Fail;
  std::string groups;
  for (std::size_t p = 0; p < hs.size(); ++p) groups += (p ? ", " : "") + hs[p].to_string();
  s.lines.push_back("homology sector n=" + std::to_string(c.n) + " r=" + std::to_string(c.r) + ": (" + groups +
                    ") " + sector::to_string(s.status));
  return s;
}

Section simpalg_check(const RunConfig& c) {
  Section s;
  s.parameters = {{"nmax", c.nmax}, {"samples", c.samples}, {"seed", c.seed}, {"q", c.q}};
  const auto rep = simpalg::check_simplicial_identities(c.nmax, c.samples, c.seed, c.q);
  json fams = json::array();
  for (const auto& f : rep.families)
    fams.push_back({{"family", f.name},
                    {"checks", f.checks},
                    {"failures", f.failures},
                    {"counterexamples", f.counterexamples}});
  s.result = {{"families", fams}, {"pass", rep.pass()}};
  s.status = rep.pass() ? Status::Pass : Status::Fail;
  s.lines.push_back("simpalg check nmax=" + std::to_string(c.nmax) + " samples=" + std::to_string(c.samples) +
                    ": " + sector::to_string(s.status));
  return s;
}

// Runs a section, mapping resource exhaustion to INCONCLUSIVE and broken invariants to FAIL.
template <typename Fn>
Section guarded(const std::string& name, Fn&& fn) {
  try {
    return fn();
  } catch (const BudgetExceeded& e) {
    Section s;
    s.status = Status::Inconclusive;
    s.result = {{"error", e.what()}};
    s.lines.push_back(name + ": INCONCLUSIVE (" + e.what() + ")");
    return s;
  } catch (const PrecisionError& e) {
    Section s;
    s.status = Status::Inconclusive;
    s.result = {{"error", e.what()}};
    s.lines.push_back(name + ": INCONCLUSIVE (" + e.what() + ")");
    return s;
  } catch (const InvariantViolation& e) {
    Section s;
    s.status = Status::Fail;
    s.result = {{"error", e.what()}};
    s.lines.push_back(name + ": FAIL (" + e.what() + ")");
    return s;
  }
}

std::string probe_of(const std::string& command) {
  static const std::map<std::string, std::string> probes = {
      {"rootsys info", "root-system-and-highest-root-multiplicities"},
      {"chevalley bn-check", "bn-pair-axioms-finite-tits-system"},
      {"building ball", "building-lattice-model-window"},
      {"domain verify", "sector-fundamental-domain"},
      {"stab verify", "stabilizer-levi-unipotent-decomposition"},
      {"homology sector", "sector-contractibility-constant-coefficients"},
      {"simpalg check", "simplicial-algebra-identities"},
      {"suite all", "aggregate-suite"}};
  auto it = probes.find(command);
  return it == probes.end() ? "unknown" : it->second;
}

std::filesystem::path resolve(const RunConfig& c, const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) p = std::filesystem::path(c.out_dir) / p;
  return p;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

}  // namespace

std::string validate(const RunConfig& c) {
  static const std::vector<std::string> commands = {"rootsys info",  "chevalley bn-check", "building ball",
                                                    "domain verify", "stab verify",        "homology sector",
                                                    "simpalg check", "suite all"};
  if (std::find(commands.begin(), commands.end(), c.command) == commands.end())
    return "unknown command '" + c.command + "'";
  if (!poly::is_prime(c.q) || c.q >= (1u << 16)) return "q must be a prime below 65536";
  if (c.n < 2 || c.n > 6) return "n must be between 2 and 6";
  if (c.r < 0) return "r must be nonnegative";
  if (c.gen_degree && *c.gen_degree < 0) return "gen-degree must be nonnegative";
  if (c.search_degree && *c.search_degree < 0) return "search-degree must be nonnegative";
  if (c.window_slack < 0) return "window-slack must be nonnegative";
  if (c.max_orbit_steps == 0 || c.vertex_budget == 0) return "budgets must be positive";
  if (c.workers == 0) return "workers must be positive";
  if (c.json_path.empty()) return "json path must not be empty";
  if (c.command == "simpalg check" && (c.nmax < 2 || c.samples == 0)) return "nmax must be >= 2 and samples positive";
  if (c.command == "rootsys info") {
    if (c.family != "A" && c.family != "D") return "family must be A or D";
    if (c.rank < 1 || (c.family == "D" && c.rank < 3)) return "rank out of range for the family";
  }
  return {};
}

std::string render(const json& report) { return report.dump(2) + "\n"; }

RunResult run(const RunConfig& c) {
  RunResult res;
  if (auto why = validate(c); !why.empty()) {
    res.exit_code = kExitUsage;
    res.summary = why + "\n";
    return res;
  }
  std::string dot;
  Section s;
  if (c.command == "rootsys info") s = guarded(c.command, [&] { return rootsys_info(c); });
  else if (c.command == "chevalley bn-check") s = guarded(c.command, [&] { return bn_check(c); });
  else if (c.command == "building ball")
    s = guarded(c.command, [&] { return building_ball(c, c.dot_path ? &dot : nullptr); });
  else if (c.command == "domain verify") s = guarded(c.command, [&] { return domain_verify(c); });
  else if (c.command == "stab verify") s = guarded(c.command, [&] { return stab_verify(c); });
  else if (c.command == "homology sector") s = guarded(c.command, [&] { return homology_sector(c); });
  else if (c.command == "simpalg check") s = guarded(c.command, [&] { return simpalg_check(c); });
  else {
    RunConfig sub = c;
    sub.gen_degree = c.gen_degree.value_or(c.r + 1);
    const Section parts[] = {guarded("domain verify", [&] { return domain_verify(sub); }),
                             guarded("stab verify", [&] { return stab_verify(sub); }),
                             guarded("homology sector", [&] { return homology_sector(sub); }),
                             guarded("simpalg check", [&] { return simpalg_check(sub); })};
    const char* names[] = {"domain", "stabilizers", "homology", "simpalg"};
    s.parameters = {{"n", c.n},   {"q", c.q},         {"r", c.r},
                    {"gen_degree", *sub.gen_degree},  {"search_degree", c.search_degree.value_or(c.r)},
                    {"nmax", c.nmax}, {"samples", c.samples}, {"seed", c.seed}};
    for (std::size_t k = 0; k < 4; ++k) {
      s.status = worst(s.status, parts[k].status);
      s.result[names[k]] = {{"probes", probe_of(k == 0   ? "domain verify"
                                                 : k == 1 ? "stab verify"
                                                 : k == 2 ? "homology sector"
                                                          : "simpalg check")},
                            {"status", sector::to_string(parts[k].status)},
                            {"parameters", parts[k].parameters},
                            {"result", parts[k].result}};
      for (const auto& l : parts[k].lines) s.lines.push_back(l);
    }
  }
  res.report = {{"schema_version", kSchemaVersion},
                {"tool", "sectorlab"},
                {"command", c.command},
                {"probes", probe_of(c.command)},
                {"parameters", s.parameters},
                {"status", sector::to_string(s.status)},
                {"result", s.result}};
  res.exit_code = exit_code(s.status);
  for (const auto& l : s.lines) res.summary += l + "\n";
  res.summary += "status: " + sector::to_string(s.status) + "\n";

  const auto report_path = resolve(c, c.json_path);
  write_file(report_path, render(res.report));
  res.summary += "report written to " + report_path.string() + "\n";
  if (c.dot_path && !dot.empty()) {
    const auto p = resolve(c, *c.dot_path);
    write_file(p, dot);
    res.summary += "graph written to " + p.string() + "\n";
  }
  return res;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"sectorlab: buildings, sectors and stabilizers for SL_n over F_q(t)", "sectorlab"};
  app.require_subcommand(1);
  RunConfig cfg;
  if (const char* env = std::getenv("SECTORLAB_OUT_DIR"); env && *env) cfg.out_dir = env;

  int gen_degree = -1, search_degree = -1;
  std::vector<std::pair<CLI::App*, std::string>> leaves;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_path, "JSON report path")->capture_default_str();
    sub->add_option("--workers", cfg.workers, "Worker threads")->capture_default_str();
    sub->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    sub->add_option("--out-dir", cfg.out_dir, "Directory for report files (env SECTORLAB_OUT_DIR)")
        ->capture_default_str();
  };
  auto group_params = [&](CLI::App* sub, bool with_q = true) {
    sub->add_option("--n", cfg.n, "Matrix size n of SL_n")->capture_default_str();
    if (with_q) sub->add_option("--q", cfg.q, "Prime field size")->capture_default_str();
  };
  auto leaf = [&](const std::string& group, const std::string& name, const std::string& help) {
    CLI::App* g = app.get_subcommands([&](CLI::App* a) { return a->get_name() == group; }).empty()
                      ? app.add_subcommand(group, group + " commands")
                      : app.get_subcommand(group);
    g->require_subcommand(1);
    CLI::App* sub = g->add_subcommand(name, help);
    leaves.emplace_back(sub, group + " " + name);
    common(sub);
    return sub;
  };

  auto* ri = leaf("rootsys", "info", "Root system data and highest-root multiplicities");
  ri->add_option("--family", cfg.family, "A or D")->capture_default_str();
  ri->add_option("--rank", cfg.rank, "Rank")->capture_default_str();

  auto* bn = leaf("chevalley", "bn-check", "Exhaustive BN-pair axiom check for SL_n(F_q)");
  group_params(bn);
  bn->add_flag("--degenerate", cfg.degenerate, "Use B = G (control fixture, expected to fail)");

  auto* bb = leaf("building", "ball", "Ball around the standard vertex");
  group_params(bb);
  bb->add_option("--r", cfg.r, "Radius")->capture_default_str();
  bb->add_option("--vertex-budget", cfg.vertex_budget, "Vertex cap")->capture_default_str();
  bb->add_option("--dot", cfg.dot_path, "Write the 1-skeleton as Graphviz DOT");

  auto domain_opts = [&](CLI::App* sub) {
    sub->add_option("--gen-degree", gen_degree, "Generator degree (default r + 1)");
    sub->add_option("--max-orbit-steps", cfg.max_orbit_steps, "Orbit step budget")->capture_default_str();
    sub->add_option("--window-slack", cfg.window_slack, "Extra radius for orbit paths")->capture_default_str();
    sub->add_option("--vertex-budget", cfg.vertex_budget, "Vertex cap")->capture_default_str();
  };
  auto* dv = leaf("domain", "verify", "Orbit check that the sector is a fundamental domain");
  group_params(dv);
  dv->add_option("--r", cfg.r, "Ball radius")->capture_default_str();
  domain_opts(dv);

  auto* sv = leaf("stab", "verify", "Predicted versus searched stabilizers of sector simplices");
  group_params(sv);
  sv->add_option("--r", cfg.r, "Sector radius")->capture_default_str();
  sv->add_option("--search-degree", search_degree, "Degree cap of the stabilizer search (default r)");

  auto* hs = leaf("homology", "sector", "Integral homology of a sector window");
  group_params(hs);
  hs->add_option("--r", cfg.r, "Sector radius")->capture_default_str();
  hs->add_flag("--abelian-table", cfg.abelian_table, "Add exploratory abelianization table");

  auto* sc = leaf("simpalg", "check", "Simplicial identities of the algebraic simplex");
  sc->add_option("--nmax", cfg.nmax, "Largest level")->capture_default_str();
  sc->add_option("--samples", cfg.samples, "Random samples per level")->capture_default_str();
  sc->add_option("--q", cfg.q, "Prime field size")->capture_default_str();

  auto* sa = leaf("suite", "all", "Domain, stabilizer, homology and simplicial suites together");
  group_params(sa);
  sa->add_option("--r", cfg.r, "Radius")->capture_default_str();
  sa->add_option("--nmax", cfg.nmax, "Largest simplicial level")->capture_default_str();
  sa->add_option("--samples", cfg.samples, "Random samples per level")->capture_default_str();
  sa->add_option("--search-degree", search_degree, "Degree cap of the stabilizer search (default r)");
  domain_opts(sa);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  for (const auto& [sub, name] : leaves)
    if (sub->parsed()) cfg.command = name;
  if (gen_degree >= 0) cfg.gen_degree = gen_degree;
  if (search_degree >= 0) cfg.search_degree = search_degree;

  if (auto why = validate(cfg); !why.empty()) {
    err << "error: " << why << "\n\n" << app.help();
    return kExitUsage;
  }
  RunResult res;
  try {
    res = run(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  out << res.summary;
  return res.exit_code;
}

}  // namespace sectorlab::cli

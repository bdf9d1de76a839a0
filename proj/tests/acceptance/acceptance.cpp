// Acceptance run: one line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "sectorlab/chevalley.hpp"
#include "sectorlab/homology.hpp"
#include "sectorlab/sector.hpp"
#include "sectorlab/simpalg.hpp"
#include "sectorlab/stabilizers.hpp"

using namespace sectorlab;
using poly::PrimeField;

namespace {

// Wall-clock limits in seconds; every numeric comparison below is exact.
constexpr double kRankOneDomainSeconds = 120.0;
constexpr double kRankTwoDomainSeconds = 600.0;
constexpr double kBnSeconds = 60.0;

struct Verdict {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double s) {
  std::ostringstream o;
  o.precision(2);
  o << std::fixed << s << "s";
  return o.str();
}

Verdict domain(std::initializer_list<std::tuple<int, std::uint32_t, int, int>> configs, double limit) {
  Verdict v;
  for (auto [n, q, r, g] : configs) {
    sector::DomainOptions o;
    o.n = n;
    o.q = q;
    o.r = r;
    o.gen_degree = g;
    const auto t0 = std::chrono::steady_clock::now();
    const auto rep = sector::verify_fundamental_domain(o);
    const double t = seconds_since(t0);
    const std::string tag = "(" + std::to_string(n) + "," + std::to_string(q) + "," + std::to_string(r) + "," +
                            std::to_string(g) + ")";
    v.require(rep.status == sector::Status::Pass, tag + " status " + sector::to_string(rep.status));
    v.require(rep.unreached.empty() && rep.covered > 0, tag + " coverage below 100%");
    v.require(rep.duplicates.empty(), tag + " duplicates " + std::to_string(rep.duplicates.size()));
    v.require(t < limit, tag + " took " + fmt(t));
    if (v.pass) v.detail += (v.detail.empty() ? "" : ", ") + tag + " " + std::to_string(rep.covered) + " simplices " + fmt(t);
  }
  return v;
}

struct StabCase {
  int n;
  std::uint32_t q;
  int r;
};
constexpr StabCase kStabCases[] = {{2, 2, 4}, {2, 3, 4}, {3, 2, 2}};

Verdict stabilizer_agreement() {
  Verdict v;
  std::size_t checked = 0;
  for (auto [n, q, r] : kStabCases) {
    PrimeField f(q);
    for (const auto& s : sector::sector_simplices(n, r)) {
      const auto desc = sector::predict_stabilizer(s);
      const auto gamma = stabilizers::realize_stabilizer(desc, f);
      stabilizers::BruteOptions bo;
      bo.search_degree = r;
      const auto brute = stabilizers::brute_stabilizer(sector::to_building(s, f), bo);
      v.require(!brute.lower_bound_only, s.to_string() + " search hit its degree cap");
      v.require(gamma.same_elements(brute.group), s.to_string() + " realized " + std::to_string(gamma.order()) +
                                                      " vs searched " + std::to_string(brute.group.order()));
      if (n == 2 && s.vertices.size() == 1) {
        const int m = s.vertices[0].exponents[0];
        // v_0 is fixed by all of SL_2(F_q); v_m for m >= 1 has order (q - 1) q^(m + 1).
        std::size_t expected = m == 0 ? q * (q - 1) * (q + 1) : q - 1;
        for (int k = 0; m > 0 && k <= m; ++k) expected *= q;
        v.require(gamma.order() == expected && brute.group.order() == expected,
                  "|Stab v_" + std::to_string(m) + "| != " + std::to_string(expected));
      }
      ++checked;
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " simplices, both paths equal";
  return v;
}

Verdict extension_structure() {
  Verdict v;
  std::size_t checked = 0;
  for (auto [n, q, r] : kStabCases) {
    PrimeField f(q);
    for (const auto& s : sector::sector_simplices(n, r)) {
      const auto desc = sector::predict_stabilizer(s);
      const auto gamma = stabilizers::realize_stabilizer(desc, f);
      const auto rep = stabilizers::extension_check(gamma, desc);
      v.require(rep.ok(), s.to_string() + " " + (rep.violations.empty() ? "" : rep.violations.front()));
      v.require(rep.unipotent_normal && rep.levi_subgroup && rep.splits && rep.orders_factor,
                s.to_string() + " structure flags");
      v.require(rep.gamma_order == rep.unipotent_order * rep.levi_order, s.to_string() + " |G| != |U||L|");
      ++checked;
    }
  }
  if (v.pass) v.detail = std::to_string(checked) + " simplices, 0 violations";
  return v;
}

Verdict torus_weights() {
  Verdict v;
  PrimeField f(5);
  std::size_t pairs = 0;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b) {
      const roots::Coweight lambda{{a, b, -a - b}};
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
          ++pairs;
          const int w = chevalley::torus_conjugation_weight(f, lambda, i, j);
          v.require(w == lambda.exponents[i] - lambda.exponents[j], "weight mismatch");
        }
    }
  if (v.pass) v.detail = std::to_string(pairs) + "/" + std::to_string(pairs) + " (root, coweight) pairs exact";
  return v;
}

Verdict central_series() {
  Verdict v;
  PrimeField f(2);
  const auto borel = stabilizers::lower_central_series(stabilizers::unipotent_radical(3, f, {0, 1}));
  v.require(borel.length == 2, "Borel unipotent length " + std::to_string(borel.length));
  for (int n : {3, 4})
    for (int k = 0; k + 1 < n; ++k) {
      const auto cs = stabilizers::lower_central_series(stabilizers::unipotent_radical(n, f, {k}));
      v.require(cs.length == 1, "maximal parabolic radical SL_" + std::to_string(n) + " node " + std::to_string(k) +
                                    " length " + std::to_string(cs.length));
    }
  if (v.pass) v.detail = "Borel length 2, 5 maximal parabolic radicals abelian";
  return v;
}

Verdict contractibility() {
  Verdict v;
  auto acyclic = [&](int n, int r) {
    const auto h = homology::homology_groups(homology::sector_complex(n, r));
    bool ok = !h.empty() && h[0].betti == 1 && h[0].torsion.empty();
    for (std::size_t p = 1; p < h.size(); ++p) ok = ok && h[p].is_zero();
    v.require(ok, "SL_" + std::to_string(n) + " r=" + std::to_string(r) + " not (Z, 0, ...)");
  };
  for (int r = 0; r <= 6; ++r) acyclic(2, r);
  for (int r = 0; r <= 3; ++r) acyclic(3, r);
  const auto c = homology::homology_groups(homology::circle_fixture());
  v.require(c.size() == 2 && c[0].to_string() == "Z" && c[1].to_string() == "Z", "circle control not (Z, Z)");
  if (v.pass) v.detail = "11 windows (Z, 0, ...), circle (Z, Z)";
  return v;
}

Verdict bn_axioms() {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto [n, q] : {std::pair{2, 2u}, std::pair{2, 3u}, std::pair{3, 2u}}) {
    const auto rep = chevalley::check_bn_axioms(chevalley::spherical_tits_system(n, PrimeField(q)));
    v.require(rep.pass, rep.label + " fails");
  }
  const auto bad = chevalley::check_bn_axioms(chevalley::degenerate_tits_system(2, PrimeField(2)));
  bool bn2_fails = false;
  for (bool b : bad.bn2) bn2_fails = bn2_fails || !b;
  v.require(!bad.pass && bn2_fails, "degenerate fixture passes the second axiom");
  const double t = seconds_since(t0);
  v.require(t < kBnSeconds, "took " + fmt(t));
  if (v.pass) v.detail = "3 spherical systems pass, B = G fails, " + fmt(t);
  return v;
}

Verdict simplicial() {
  Verdict v;
  const auto rep = simpalg::check_simplicial_identities(4, 25, 7);
  std::size_t checks = 0;
  for (const auto& f : rep.families) {
    v.require(f.failures == 0, f.name + " " + std::to_string(f.failures) + " failures");
    checks += f.checks;
  }
  v.require(rep.families.size() == 6, "expected five identity families and the determinant check");
  if (v.pass) v.detail = std::to_string(checks) + " checks, 0 failures";
  return v;
}

Verdict witnesses() {
  Verdict v;
  v.require(!stabilizers::sn_witness(2, 2).has_value(), "F_2 reported S(2)");
  const auto w = stabilizers::sn_witness(5, 2);
  v.require(w.has_value() && stabilizers::is_sn_witness(PrimeField(5), *w), "F_5 witness missing or invalid");
  v.require(stabilizers::is_sn_witness(PrimeField(5), {1, 3}), "(1, 3) rejected over F_5");
  if (v.pass) v.detail = "F_2 none, F_5 witness (" + std::to_string((*w)[0]) + ", " + std::to_string((*w)[1]) + ")";
  return v;
}

Verdict determinism() {
  Verdict v;
  const auto root = std::filesystem::temp_directory_path() / "sectorlab-acceptance";
  std::filesystem::remove_all(root);
  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(f), {});
  };
  for (const std::vector<std::string> base : {std::vector<std::string>{"--n", "2", "--q", "3", "--r", "3"},
                                               std::vector<std::string>{"--n", "3", "--q", "2", "--r", "2"}}) {
    std::string reports[2];
    int k = 0;
    for (const char* workers : {"1", "8"}) {
      std::vector<std::string> args = {"sectorlab", "suite", "all", "--seed", "7", "--workers", workers,
                                       "--out-dir", (root / (base[1] + workers)).string()};
      args.insert(args.end(), base.begin(), base.end());
      std::vector<const char*> argv;
      for (const auto& a : args) argv.push_back(a.c_str());
      std::ostringstream out, err;
      const int code = cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
      v.require(code == cli::kExitPass, "suite all exit " + std::to_string(code));
      reports[k++] = slurp(root / (base[1] + workers) / "report.json");
    }
    v.require(!reports[0].empty() && reports[0] == reports[1], "reports differ for n=" + base[1]);
  }
  if (v.pass) v.detail = "workers 1 and 8 byte-identical for two suite configurations";
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"fundamental domain, rank 1",
       [] { return domain({{2, 2, 5, 6}, {2, 3, 4, 5}}, kRankOneDomainSeconds); }},
      {"fundamental domain, rank 2", [] { return domain({{3, 2, 2, 3}}, kRankTwoDomainSeconds); }},
      {"stabilizer agreement", stabilizer_agreement},
      {"extension structure", extension_structure},
      {"torus weights", torus_weights},
      {"central series", central_series},
      {"sector contractibility", contractibility},
      {"BN axioms", bn_axioms},
      {"simplicial identities", simplicial},
      {"S(n) witnesses", witnesses},
      {"determinism", determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, check] : criteria) {
    ++index;
    Verdict v;
    try {
      v = check();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria pass\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}

#include <benchmark/benchmark.h>

#include <random>

#include "sectorlab/building.hpp"
#include "sectorlab/homology.hpp"
#include "sectorlab/sector.hpp"
#include "sectorlab/stabilizers.hpp"

using namespace sectorlab;
using poly::PrimeField;

namespace {

PolyMatrix random_sl(PrimeField f, int n, std::mt19937_64& rng, int degree) {
  PolyMatrix m = PolyMatrix::identity(f, n);
  for (int k = 0; k < 8; ++k) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    std::vector<poly::Residue> c(degree + 1);
    for (auto& x : c) x = static_cast<poly::Residue>(rng() % f.modulus());
    PolyMatrix e = PolyMatrix::identity(f, n);
    e(i, j) = poly::Polynomial(f, c);
    m = m * e;
  }
  return m;
}

void BM_CanonicalForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PrimeField f(3);
  std::mt19937_64 rng(1);
  auto m = to_rational(random_sl(f, n, rng, 2));
  for (auto _ : state) benchmark::DoNotOptimize(building::canonical_form(m));
}
BENCHMARK(BM_CanonicalForm)->Arg(2)->Arg(3)->Arg(4);

void BM_Act(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  PrimeField f(2);
  std::mt19937_64 rng(2);
  auto g = random_sl(f, n, rng, 2);
  auto v = building::BuildingVertex::from_coweight(f, roots::Coweight{std::vector<int>(n, 0)});
  auto nb = building::neighbors(v);
  for (auto _ : state) benchmark::DoNotOptimize(building::act(g, nb.back()));
}
BENCHMARK(BM_Act)->Arg(2)->Arg(3)->Arg(4);

void BM_Ball(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0)), r = static_cast<int>(state.range(1));
  PrimeField f(2);
  for (auto _ : state) benchmark::DoNotOptimize(building::ball(building::BuildingVertex::standard(f, n), r));
}
BENCHMARK(BM_Ball)->Args({2, 6})->Args({3, 2})->Unit(benchmark::kMillisecond);

void BM_DomainVerify(benchmark::State& state) {
  sector::DomainOptions o;
  o.n = static_cast<int>(state.range(0));
  o.q = static_cast<std::uint32_t>(state.range(1));
  o.r = static_cast<int>(state.range(2));
  o.gen_degree = o.r + 1;
  for (auto _ : state) benchmark::DoNotOptimize(sector::verify_fundamental_domain(o));
}
BENCHMARK(BM_DomainVerify)->Args({2, 2, 5})->Args({2, 3, 4})->Args({3, 2, 2})->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State& state) {
  auto c = homology::sector_complex(3, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(homology::smith_normal_form(c.boundary[1]));
}
BENCHMARK(BM_SmithNormalForm)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RealizeStabilizer(benchmark::State& state) {
  PrimeField f(static_cast<std::uint32_t>(state.range(0)));
  sector::SectorSimplex s{{roots::Coweight{{2, 1, 0}}}};
  auto desc = sector::predict_stabilizer(s);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizers::realize_stabilizer(desc, f));
}
BENCHMARK(BM_RealizeStabilizer)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "mubclass/entropy.hpp"
#include "mubclass/orbits.hpp"
#include "mubclass/prime_power.hpp"
#include "mubclass/transform_table.hpp"

using namespace mubclass;

static void BM_TableAnalytic(benchmark::State& state) {
  const int d = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_table_analytic(d));
}
BENCHMARK(BM_TableAnalytic)->Arg(5)->Arg(17)->Arg(37);

static void BM_TableNumeric(benchmark::State& state) {
  const int d = int(state.range(0));
  auto fam = build_prime_mubs(d);
  for (auto _ : state) benchmark::DoNotOptimize(build_table_numeric(fam));
}
BENCHMARK(BM_TableNumeric)->Arg(5)->Arg(13);

static void BM_Classify(benchmark::State& state) {
  const int d = int(state.range(0));
  const int k = int(state.range(1));
  auto table = build_table_analytic(d);
  for (auto _ : state) benchmark::DoNotOptimize(classify_all(d, k, table));
}
BENCHMARK(BM_Classify)->Args({5, 3})->Args({13, 6})->Args({17, 8})->Args({19, 9});

static void BM_OrbitClosure(benchmark::State& state) {
  auto table = build_table_analytic(17);
  auto seed = SubsetCode::from_indices(std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
  for (auto _ : state) benchmark::DoNotOptimize(orbit_closure(seed, table));
}
BENCHMARK(BM_OrbitClosure);

static void BM_GroupClosure(benchmark::State& state) {
  const int d = int(state.range(0));
  auto table = build_table_analytic(d);
  for (auto _ : state) benchmark::DoNotOptimize(close_rows(table));
}
BENCHMARK(BM_GroupClosure)->Arg(13)->Arg(19);

static void BM_MinEntropy(benchmark::State& state) {
  auto fam = build_prime_mubs(5);
  auto subset = SubsetCode::from_indices(std::vector<int>{0, 1, 2});
  EntropyOptConfig cfg;
  cfg.random_starts = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(min_entropy(subset, fam, cfg));
}
BENCHMARK(BM_MinEntropy)->Arg(8)->Arg(64);

static void BM_DiscoverPerms8(benchmark::State& state) {
  auto fam = build_prime_power_mubs(2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(discover_permutations(fam));
}
BENCHMARK(BM_DiscoverPerms8);

BENCHMARK_MAIN();

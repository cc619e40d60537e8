#include <benchmark/benchmark.h>

#include "nilsymp/kostant.hpp"
#include "nilsymp/symp.hpp"

using namespace nilsymp;

static void BM_BuildRootSystem_E8(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(RootSystem::build({Family::E, 8}));
}
BENCHMARK(BM_BuildRootSystem_E8);

static void BM_StructureTable_E8(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::E, 8});
  for (auto _ : state) benchmark::DoNotOptimize(StructureTable::build(rs));
}
BENCHMARK(BM_StructureTable_E8);

static void BM_Closed2Forms_D6Pair(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::D, 6});
  const StructureTable st = StructureTable::build(rs);
  const NilAlgebra n = NilAlgebra::nilradical({rs, {5, 6}}, st);
  for (auto _ : state) benchmark::DoNotOptimize(closed_2forms(n));
}
BENCHMARK(BM_Closed2Forms_D6Pair);

static void BM_BettiTable_C4Singleton(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::C, 4});
  const StructureTable st = StructureTable::build(rs);
  const NilAlgebra n = NilAlgebra::nilradical({rs, {3}}, st);
  for (auto _ : state) benchmark::DoNotOptimize(betti_all(n));
}
BENCHMARK(BM_BettiTable_C4Singleton);

static void BM_RankSampling_C4(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::C, 4});
  const StructureTable st = StructureTable::build(rs);
  const NilAlgebra n = NilAlgebra::nilradical({rs, {3}}, st);
  for (auto _ : state)
    benchmark::DoNotOptimize(max_closed_rank(n, 16, 4611686018427387847ull, 11));
}
BENCHMARK(BM_RankSampling_C4);

static void BM_Decide_G2Extension(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::G, 2});
  const StructureTable st = StructureTable::build(rs);
  const ParabolicSpec spec{rs, {1}};
  const NilAlgebra n = NilAlgebra::nilradical(spec, st);
  DecideOptions opts;
  opts.case_key = "G2:{1}";
  for (auto _ : state) benchmark::DoNotOptimize(decide(n, Target::Extension, spec, opts));
}
BENCHMARK(BM_Decide_G2Extension);

static void BM_HwvVerification_B3(benchmark::State& state) {
  const RootSystem rs = RootSystem::build({Family::B, 3});
  const StructureTable st = StructureTable::build(rs);
  const ParabolicSpec spec{rs, {3}};
  for (auto _ : state) benchmark::DoNotOptimize(verify_hwv_against_cohomology(spec, st, true));
}
BENCHMARK(BM_HwvVerification_B3);

BENCHMARK_MAIN();

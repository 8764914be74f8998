#include <benchmark/benchmark.h>

#include "cnlie/cohomology.hpp"
#include "cnlie/derivations.hpp"
#include "cnlie/families.hpp"
#include "cnlie/invariants.hpp"

using namespace cnlie;

static void BM_DerivationSpace(benchmark::State& state) {
  const LieAlgebra g = g4(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(derivation_space(g).space.dim());
}
BENCHMARK(BM_DerivationSpace)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_RestrictedZ2(benchmark::State& state) {
  const std::size_t m = static_cast<std::size_t>(state.range(0));
  const LieAlgebra g = g4(m);
  Z2Options opt;
  opt.restricted = true;
  opt.property = g4_property(m);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_z2(g, opt).z2_dim);
}
BENCHMARK(BM_RestrictedZ2)->DenseRange(4, 7)->Unit(benchmark::kMillisecond);

static void BM_ScalarH2(benchmark::State& state) {
  const LieAlgebra g = g4(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scalar_h2(g).dim);
}
BENCHMARK(BM_ScalarH2)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

static void BM_CharacteristicSequence(benchmark::State& state) {
  const LieAlgebra g = g41(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(characteristic_sequence(g).size());
}
BENCHMARK(BM_CharacteristicSequence)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

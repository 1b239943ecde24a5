#include <benchmark/benchmark.h>

#include "mocurve/elimmat.hpp"
#include "mocurve/implicit.hpp"
#include "mocurve/random.hpp"
#include "mocurve/rees.hpp"

using namespace mocurve;

namespace {

Parametrization sample(int d) {
  Random rng(1000 + static_cast<std::uint64_t>(d));
  return rng.parametrization(d, 5);
}

void BM_Implicitize(benchmark::State& state, Method method) {
  const auto phi = sample(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(implicitize(phi, method));
}

void BM_SylvesterDeterminant(benchmark::State& state) {
  const auto [f, g] = fiber_lines(sample(static_cast<int>(state.range(0))));
  const PolyMatrix S = sylvester_matrix(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(S));
}

void BM_BezoutDeterminant(benchmark::State& state) {
  const auto [f, g] = fiber_lines(sample(static_cast<int>(state.range(0))));
  const PolyMatrix B = bezout_matrix(f, g);
  for (auto _ : state) benchmark::DoNotOptimize(determinant(B));
}

void BM_MinimalGenerators(benchmark::State& state, bool modular) {
  const auto phi = sample(static_cast<int>(state.range(0)));
  ReesOptions o;
  o.modular = modular;
  for (auto _ : state) benchmark::DoNotOptimize(minimal_generators(phi, o));
}

}  // namespace

BENCHMARK_CAPTURE(BM_Implicitize, resultant, Method::Resultant)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Implicitize, mubasis, Method::MuBasis)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Implicitize, movinglines, Method::MovingLines)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SylvesterDeterminant)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BezoutDeterminant)->DenseRange(2, 6, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, modular, true)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_MinimalGenerators, exact, false)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

#include "gme/bloch.hpp"
#include "gme/criteria.hpp"
#include "gme/states.hpp"
#include "gme/su_basis.hpp"

#include <benchmark/benchmark.h>

using namespace gme;

static void BM_CorrelationTensors(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const GeneratorBasis basis = gellmann_basis(d);
  const DensityMatrix rho = random_mixed(d, 1);
  for (auto _ : state) benchmark::DoNotOptimize(correlation_tensors(rho, basis));
}
BENCHMARK(BM_CorrelationTensors)->Arg(2)->Arg(3)->Arg(4);

static void BM_Reconstruct(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const GeneratorBasis basis = gellmann_basis(d);
  const CorrelationData data = correlation_tensors(random_mixed(d, 2), basis);
  for (auto _ : state) benchmark::DoNotOptimize(reconstruct(data, basis));
}
BENCHMARK(BM_Reconstruct)->Arg(2)->Arg(3);

static void BM_UnfoldingSpectra(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const GeneratorBasis basis = gellmann_basis(d);
  const CorrelationData data = correlation_tensors(random_mixed(d, 3), basis);
  for (auto _ : state) benchmark::DoNotOptimize(unfolding_spectra(data));
}
BENCHMARK(BM_UnfoldingSpectra)->Arg(2)->Arg(3)->Arg(4);

static void BM_EvaluateCriteria(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const GeneratorBasis basis = gellmann_basis(d);
  const DensityMatrix rho = isotropic_mix(ghz(d), 0.8);
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_criteria(rho, basis));
}
BENCHMARK(BM_EvaluateCriteria)->Arg(2)->Arg(3);

BENCHMARK_MAIN();

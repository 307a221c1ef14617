#include <benchmark/benchmark.h>

#include <random>

#include "xychain/xychain.hpp"

namespace {

xychain::XStateCoefficients sample() {
  std::mt19937_64 rng(1);
  return xychain::sample_coefficients(rng);
}

void BM_EvaluateClosedForms(benchmark::State& state) {
  const auto c = sample();
  for (auto _ : state) benchmark::DoNotOptimize(xychain::evaluate(c));
}
BENCHMARK(BM_EvaluateClosedForms);

void BM_WoottersConcurrence(benchmark::State& state) {
  const auto rho = xychain::build_density_matrix(sample());
  for (auto _ : state) benchmark::DoNotOptimize(xychain::wootters_concurrence(rho));
}
BENCHMARK(BM_WoottersConcurrence);

void BM_TransitionAmplitude(benchmark::State& state) {
  const xychain::SpectralData sd({21, 1.0, 0.0, 10.0, 1});
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(xychain::transition_amplitude(sd, 7, 1, t));
    t += 0.01;
  }
}
BENCHMARK(BM_TransitionAmplitude);

// Default-size sweep: N = 21, all pairs, one representation, 200 time points.
void BM_Sweep(benchmark::State& state) {
  xychain::RunConfig cfg;
  cfg.representations = {static_cast<xychain::Representation>(state.range(0))};
  cfg.time_grid.steps = 200;
  cfg.workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(xychain::run_sweep(cfg));
  state.SetItemsProcessed(state.iterations() * 210 * 200);
}
BENCHMARK(BM_Sweep)->Args({0, 1})->Args({1, 1})->Args({2, 1})->Args({1, 4})->Unit(benchmark::kMillisecond);

void BM_OracleEvolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const xychain::oracle::OracleState oracle({n, 1.0, 0.0, 10.0, 1});
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.evolve(t));
    t += 0.1;
  }
}
BENCHMARK(BM_OracleEvolve)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

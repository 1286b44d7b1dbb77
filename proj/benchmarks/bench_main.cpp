#include <benchmark/benchmark.h>

#include <cmath>

#include "zeno/correlations.hpp"
#include "zeno/dynamics.hpp"
#include "zeno/nonhermitian.hpp"
#include "zeno/spinboson.hpp"
#include "zeno/sweep.hpp"

using namespace zeno;

static void BM_GammaRate(benchmark::State& state) {
  SpinBosonParams p;
  p.eta = 0.05;
  p.bias = 0.65;
  p.delta = 0.6;
  double tau = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_rate(tau, p));
    tau = tau < 5.0 ? tau + 0.1 : 0.5;  // vary the interval, stay in range
  }
}
BENCHMARK(BM_GammaRate);

static void BM_GammaClosed(benchmark::State& state) {
  double tau = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gamma_closed(tau, 0.25));
    tau = tau < 10.0 ? tau + 0.1 : 0.5;
  }
}
BENCHMARK(BM_GammaClosed);

static void BM_SpectrumTable(benchmark::State& state) {
  SpinBosonParams p;
  p.eta = 3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(make_spectrum_table(p));
  }
}
BENCHMARK(BM_SpectrumTable);

static void BM_DiscordOptimizer(benchmark::State& state) {
  const double u = std::sqrt(0.6), v = std::sqrt(0.4);
  const XState x = evolve_phi(std::sqrt(0.2), {u, v}, {u, v});
  for (auto _ : state) {
    benchmark::DoNotOptimize(discord(x, Side::A));
  }
}
BENCHMARK(BM_DiscordOptimizer);

static void BM_ConcurrenceWootters(benchmark::State& state) {
  const double u = std::sqrt(0.6), v = std::sqrt(0.4);
  const DensityMatrix4 m = evolve_phi(std::sqrt(0.2), {u, v}, {u, v}).to_matrix();
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence_wootters(m));
  }
}
BENCHMARK(BM_ConcurrenceWootters);

static void BM_Propagator(benchmark::State& state) {
  PrecisionModel m;
  m.e_r = 0.4;
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(occupation_probs(m, t));
    t = t < 6.0 ? t + 0.05 : 0.0;
  }
}
BENCHMARK(BM_Propagator);

static void BM_SweepRow(benchmark::State& state) {
  FamilySweepSpec spec;
  spec.tau_steps = 2;
  spec.tau_min = 1.0;
  spec.tau_max = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(spec, 1));
  }
}
BENCHMARK(BM_SweepRow);

BENCHMARK_MAIN();

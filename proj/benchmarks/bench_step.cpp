#include <benchmark/benchmark.h>

#include <cmath>

#include "gblrei/harness.hpp"

using namespace gblrei;

namespace {

EvolutionState make_state(int m) {
    const TorusGrid grid(M_PI, m);
    EvolutionState s{random_zero_mean_spectrum(grid, 1, 0.1), 0.1, -0.2, 0.0};
    s.u.at(0) = 0.0;
    return s;
}

void BM_step(benchmark::State& state) {
    const EvolutionState s0 = make_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(step(s0, 1e-3));
}
BENCHMARK(BM_step)->Arg(256)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_eval_step_terms(benchmark::State& state) {
    const EvolutionState s0 = make_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(eval_step_terms(s0.u, 1e-3));
}
BENCHMARK(BM_eval_step_terms)->Arg(1024)->Arg(4096);

void BM_pointwise_product(benchmark::State& state) {
    const TorusGrid grid(M_PI, static_cast<int>(state.range(0)));
    const Spectrum f = random_zero_mean_spectrum(grid, 2);
    const Spectrum g = random_zero_mean_spectrum(grid, 3);
    for (auto _ : state) benchmark::DoNotOptimize(pointwise_product(f, g));
}
BENCHMARK(BM_pointwise_product)->Arg(1024)->Arg(4096)->Arg(16384);

void BM_oracle_I(benchmark::State& state) {
    const TorusGrid grid(M_PI, static_cast<int>(state.range(0)));
    const Spectrum f = random_zero_mean_spectrum(grid, 4);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_I(0, f, 1e-2));
}
BENCHMARK(BM_oracle_I)->Arg(32)->Arg(64)->Arg(128);

void BM_reference_rk4(benchmark::State& state) {
    const EvolutionState s0 = make_state(1024);
    for (auto _ : state)
        benchmark::DoNotOptimize(oracle::reference_evolve(s0, 1e-2, 1e-3));
}
BENCHMARK(BM_reference_rk4);

}  // namespace

BENCHMARK_MAIN();

// Serial reference against the OpenMP path for the sweep and kf estimation kernels.

#include <benchmark/benchmark.h>

#include "rootshift/bounds.hpp"
#include "rootshift/sweep.hpp"

namespace {

using rootshift::Execution;

void BM_Sweep(benchmark::State& state, rootshift::Suite suite, Execution exec) {
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rootshift::run_suite(suite, 42, samples, exec));
    state.SetItemsProcessed(state.iterations() * samples);
}

void BM_EstimateKf(benchmark::State& state, Execution exec) {
    const auto T = rootshift::DiffOperator::from_coefficients({1.0, 0.0, 0.3, -0.2}, 6);
    const int samples = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(rootshift::estimate_kf(T, samples, 7, exec));
    state.SetItemsProcessed(state.iterations() * samples);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Sweep, lmt_serial, rootshift::Suite::lmt, Execution::serial)->Arg(64);
BENCHMARK_CAPTURE(BM_Sweep, lmt_parallel, rootshift::Suite::lmt, Execution::parallel)->Arg(64);
BENCHMARK_CAPTURE(BM_Sweep, convergence_serial, rootshift::Suite::convergence, Execution::serial)->Arg(16);
BENCHMARK_CAPTURE(BM_Sweep, convergence_parallel, rootshift::Suite::convergence, Execution::parallel)->Arg(16);
BENCHMARK_CAPTURE(BM_EstimateKf, serial, Execution::serial)->Arg(256);
BENCHMARK_CAPTURE(BM_EstimateKf, parallel, Execution::parallel)->Arg(256);

BENCHMARK_MAIN();

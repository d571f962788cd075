// Serial reference against the OpenMP path for the trial-parallel kernels.
// Both paths produce identical reports; only wall time differs.
#include <benchmark/benchmark.h>
#include <omp.h>

#include "somos/identities.hpp"
#include "somos/lattice.hpp"

using namespace somos;

namespace {

TrialConfig config(const benchmark::State& state, long trials) {
    TrialConfig c;
    c.trials = trials;
    c.exec = state.range(0) == 0 ? Execution::Serial : Execution::Parallel;
    return c;
}

void label(benchmark::State& state) {
    state.SetLabel(state.range(0) == 0 ? "serial" : "openmp x" + std::to_string(omp_get_max_threads()));
}

void BM_VerifyAll(benchmark::State& state) {
    const TrialConfig cfg = config(state, 50);
    for (auto _ : state) benchmark::DoNotOptimize(verify_all(cfg).failures());
    label(state);
}

void BM_LambdaEnum5(benchmark::State& state) {
    const TrialConfig cfg = config(state, 100);
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_lambda_sets(5, cfg).classes.size());
    label(state);
}

void BM_Lattice(benchmark::State& state) {
    const TrialConfig cfg = config(state, 8);
    for (auto _ : state) benchmark::DoNotOptimize(verify_lattice(cfg, 4, 8, 20).checks_run);
    label(state);
}

void BM_Vajda(benchmark::State& state) {
    const TrialConfig cfg = config(state, 2000);
    for (auto _ : state) benchmark::DoNotOptimize(verify_vajda(cfg).checks_run);
    label(state);
}

}  // namespace

BENCHMARK(BM_VerifyAll)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LambdaEnum5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Lattice)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Vajda)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

// Serial reference vs OpenMP sweep kernels over the n <= 4 map corpus.

#include <benchmark/benchmark.h>

#include "cpokit/sweep.hpp"

using namespace cpokit;

namespace {

void BM_EpiQuadruple(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::OpenMP : Execution::Serial;
    (void)MapCorpus::of(4);  // build the corpus outside the timed region
    for (auto _ : state) {
        SweepResult r = epi_quadruple_sweep(4, exec);
        benchmark::DoNotOptimize(r.mismatches);
    }
}

void BM_StrongCoincidence(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::OpenMP : Execution::Serial;
    (void)MapCorpus::of(4);
    for (auto _ : state) {
        StrongCoincidence r = strong_coincidence_sweep(4, exec);
        benchmark::DoNotOptimize(r.epis.mismatches);
    }
}

void BM_CoequalizerUniversal(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::OpenMP : Execution::Serial;
    (void)MapCorpus::of(4);
    for (auto _ : state) {
        SweepResult r = coequalizer_universal_sweep(3, 4, exec);
        benchmark::DoNotOptimize(r.mismatches);
    }
}

void BM_MonoIso(benchmark::State& state) {
    const auto exec = state.range(0) ? Execution::OpenMP : Execution::Serial;
    (void)MapCorpus::of(4);
    for (auto _ : state) {
        SweepResult r = mono_iso_sweep(4, exec);
        benchmark::DoNotOptimize(r.mismatches);
    }
}

}  // namespace

BENCHMARK(BM_EpiQuadruple)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StrongCoincidence)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoequalizerUniversal)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MonoIso)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "eswap/moments.hpp"
#include "eswap/sampling.hpp"
#include "eswap/spectrum.hpp"
#include "eswap/swap.hpp"

using namespace eswap;

static void BM_ExactMomentIndep(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_moment_indep(p, 2, 2, 3));
    state.SetComplexityN(p);
}
BENCHMARK(BM_ExactMomentIndep)->DenseRange(2, 6)->Unit(benchmark::kMicrosecond);

static void BM_ExactMomentEqual(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_moment_equal(p, 2, 2, 3));
}
BENCHMARK(BM_ExactMomentEqual)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_LimitMoment(benchmark::State& state) {
    const int p = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(limit_moment(p));
}
BENCHMARK(BM_LimitMoment)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

static void BM_SwapDirect(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    const int s = 2 * d;
    RngStream g(1);
    const auto g1 = sample_gaussian(d * d, s, g);
    const auto g2 = sample_gaussian(d * d, s, g);
    for (auto _ : state)
        benchmark::DoNotOptimize(swap_direct(g1, g2, d, d, s));
}
BENCHMARK(BM_SwapDirect)->RangeMultiplier(2)->Range(2, 16)->Unit(benchmark::kMillisecond);

static void BM_SampleSpectrum(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sample_spectrum(SwapCase::indep, d, d, 2 * d, 42, i++));
}
BENCHMARK(BM_SampleSpectrum)->RangeMultiplier(2)->Range(4, 16)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

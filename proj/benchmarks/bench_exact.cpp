#include <benchmark/benchmark.h>

#include "gseries/modular.hpp"
#include "gseries/qseries.hpp"

using namespace gseries;

static void BM_SeriesMultiply(benchmark::State& state)
{
    const std::int64_t n = state.range(0);
    const QSeries a = theta_series(n);
    const QSeries b = F_series(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(100)->Arg(400)->Arg(1000);

static void BM_SeriesExpansion(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(goswami_series(k, 200));
    }
}
BENCHMARK(BM_SeriesExpansion)->DenseRange(1, 8, 1);

static void BM_Decompose(benchmark::State& state)
{
    const int k = static_cast<int>(state.range(0));
    const QSeries g = goswami_series(k, 60);
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose(g, k, 60));
    }
}
BENCHMARK(BM_Decompose)->Arg(2)->Arg(4)->Arg(8);


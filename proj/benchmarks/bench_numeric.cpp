#include <benchmark/benchmark.h>

#include "gseries/special_functions.hpp"

using namespace gseries;

static void BM_GammaQuarter(benchmark::State& state)
{
    const Precision p{static_cast<int>(state.range(0)), 10};
    for (auto _ : state) {
        benchmark::DoNotOptimize(gamma_rational(1, 4, p));
    }
}
BENCHMARK(BM_GammaQuarter)->Arg(50)->Arg(100)->Arg(300);

static void BM_SeriesNumeric(benchmark::State& state)
{
    const Precision p{static_cast<int>(state.range(0)), 10};
    const HPComplex q = q_from_tau(HPComplex(HPReal(p), HPReal(1, p)), p);
    for (auto _ : state) {
        benchmark::DoNotOptimize(goswami_numeric(4, q, p));
    }
}
BENCHMARK(BM_SeriesNumeric)->Arg(64)->Arg(200);

static void BM_Eta(benchmark::State& state)
{
    const Precision p{static_cast<int>(state.range(0)), 10};
    const HPComplex tau(HPReal(p), HPReal(1, p));
    for (auto _ : state) {
        benchmark::DoNotOptimize(eta_numeric(tau, p));
    }
}
BENCHMARK(BM_Eta)->Arg(64)->Arg(200);

#include <benchmark/benchmark.h>

#include "gdr/engine.hpp"
#include "gdr/rates.hpp"
#include "gdr/schedules.hpp"
#include "gdr/thresholds.hpp"
#include "gdr/worstcase.hpp"

using namespace gdr;

static void BM_GammaBar(benchmark::State& state) {
    const std::int64_t k = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(gamma_bar(k, -0.5));
}
BENCHMARK(BM_GammaBar)->Arg(2)->Arg(10)->Arg(100);

static void BM_NonconvexDenominator(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(denom_nonconvex_const(1.9, -1e-3, n).denominator);
}
BENCHMARK(BM_NonconvexDenominator)->Arg(10)->Arg(100);

static void BM_DynamicSequence(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(dynamic_sequence(-1e-3, n).entries.back());
}
BENCHMARK(BM_DynamicSequence)->Arg(10)->Arg(100);

static void BM_OptNumeric(benchmark::State& state) {
    const std::int64_t n = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(opt_const_nonconvex_numeric(-1e-3, n).denominator);
}
BENCHMARK(BM_OptNumeric)->Arg(5)->Arg(20);

static void BM_TightnessReport(benchmark::State& state) {
    CurvatureClass cls(-0.5, 1.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(tightness_report(cls, 1.5, state.range(0)).ratio);
}
BENCHMARK(BM_TightnessReport)->Arg(5)->Arg(50);

static void BM_InterpolationCheck(benchmark::State& state) {
    CurvatureClass cls(-0.5, 1.0);
    const WorstCaseInstance inst = wc_nonconvex_mid(cls, 1.5, state.range(0));
    const auto& set = std::get<TripletSet>(inst.payload);
    for (auto _ : state) benchmark::DoNotOptimize(is_interpolable(set, cls).interpolable);
}
BENCHMARK(BM_InterpolationCheck)->Arg(10)->Arg(100);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "harvest/model.hpp"
#include "harvest/orbit.hpp"
#include "harvest/scan.hpp"
#include "harvest/stability.hpp"
#include "harvest/yield.hpp"

namespace {

const harvest::ModelParams kParams{1.0, 500.0, 1.0, 0.3934693402873666, 2};
const harvest::InitialData kInit{100.0, {140.0, 120.0}};

void BM_LogisticFlow(benchmark::State& state) {
    double x = 100.0;
    for (auto _ : state) {
        x = harvest::logistic_flow(x, kParams, 0.75);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_LogisticFlow);

void BM_Step(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::step(kParams, 180.0, 200.0));
}
BENCHMARK(BM_Step);

void BM_Iterate100Periods(benchmark::State& state) {
    harvest::StoppingRule rule;
    rule.rel_tol = 1e-300;
    rule.consecutive_hits = 1 << 30;
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::iterate(kParams, kInit, rule));
}
BENCHMARK(BM_Iterate100Periods);

void BM_SolveThetaStar(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::solve_theta_star(0.9, 3));
}
BENCHMARK(BM_SolveThetaStar);

void BM_Classify(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::classify(kParams));
}
BENCHMARK(BM_Classify);

void BM_YieldReport(benchmark::State& state) {
    const harvest::ModelParams p{2.0, 500.0, 1.0, 0.55, 2};
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::make_yield_report(p));
}
BENCHMARK(BM_YieldReport);

void BM_BasinSample(benchmark::State& state) {
    const harvest::ModelParams p{1.3747, 307.1609, 1.0, 0.4971, 1};
    const harvest::SurvivalRule rule = harvest::SurvivalRule::for_params(p);
    for (auto _ : state)
        benchmark::DoNotOptimize(harvest::classify_basin_sample(
            p, rule, harvest::InitialData{150.0, {300.0}}));
}
BENCHMARK(BM_BasinSample);

}  // namespace

BENCHMARK_MAIN();

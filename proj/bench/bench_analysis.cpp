#include <benchmark/benchmark.h>

#include "idealrank/analysis.hpp"

namespace {

idealrank::DecisionProblem paper_case() {
    using idealrank::CriterionKind;
    return {{"A1", "A2", "A3", "A4", "A5", "A6"},
            {{"C1", CriterionKind::Benefit, 0.5},
             {"C2", CriterionKind::Benefit, 0.1},
             {"C3", CriterionKind::Benefit, 0.3},
             {"C4", CriterionKind::Cost, 0.1}},
            {{7, 6, 7, 7}, {8, 8, 7, 6}, {7, 6, 6, 6}, {8, 7, 8, 6}, {6, 6, 6, 6}, {7, 8, 6, 6}}};
}

void BM_StabilitySerial(benchmark::State& state) {
    const auto p = paper_case();
    for (auto _ : state) {
        auto r = idealrank::serial::monte_carlo_stability(p, {1}, state.range(0), 42);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_StabilityParallel(benchmark::State& state) {
    const auto p = paper_case();
    for (auto _ : state) {
        auto r = idealrank::monte_carlo_stability(p, {1}, state.range(0), 42);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepSerial(benchmark::State& state) {
    const auto p = paper_case();
    for (auto _ : state) {
        auto r = idealrank::serial::weight_sweep(p, "C1", static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}

void BM_SweepParallel(benchmark::State& state) {
    const auto p = paper_case();
    for (auto _ : state) {
        auto r = idealrank::weight_sweep(p, "C1", static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(r);
    }
}

}  // namespace

BENCHMARK(BM_StabilitySerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilityParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(101)->Arg(10001)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(101)->Arg(10001)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

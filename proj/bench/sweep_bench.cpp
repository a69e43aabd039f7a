#include <benchmark/benchmark.h>

#include "dinner/sweep.hpp"

namespace {

const std::vector<dinner::Instance>& oracle_grid()
{
    static const auto grid = dinner::instance_grid({3, 5, 5, 3, 3});
    return grid;
}

const std::vector<dinner::Instance>& build_grid()
{
    static const auto grid = dinner::instance_grid({4, 8, 8, 3, 3});
    return grid;
}

dinner::SolveLimits oracle_limits()
{
    dinner::SolveLimits lim;
    lim.node_budget = 20'000'000;
    return lim;
}

void BM_OracleSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::oracle_sweep_serial(oracle_grid(), oracle_limits()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(oracle_grid().size()));
}

void BM_OracleParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::oracle_sweep(oracle_grid(), oracle_limits()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(oracle_grid().size()));
}

void BM_BuildSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::build_sweep_serial(build_grid()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(build_grid().size()));
}

void BM_BuildParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::build_sweep(build_grid()));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(build_grid().size()));
}

void BM_LpSerial(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::lp_crosscheck_serial(60, 60, 10));
}

void BM_LpParallel(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dinner::lp_crosscheck(60, 60, 10));
}

}  // namespace

BENCHMARK(BM_OracleSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_OracleParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BuildParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LpSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_LpParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "seiffert/sharp_constants.hpp"
#include "seiffert/sweep.hpp"

namespace {

using namespace seiffert;

std::vector<double> ratios_for(std::size_t n) {
    sweep::SamplingConfig config;
    config.samples = n;
    return sweep::sample_ratios(config);
}

void BM_SweepSerial(benchmark::State& state) {
    const auto ratios = ratios_for(static_cast<std::size_t>(state.range(0)));
    const auto spec = sweep::theorem_1_1(sharp::lambda_closed(), sharp::mu_closed());
    for (auto _ : state) benchmark::DoNotOptimize(sweep::run_serial(spec, ratios));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ratios.size()));
}

void BM_SweepOpenMP(benchmark::State& state) {
    const auto ratios = ratios_for(static_cast<std::size_t>(state.range(0)));
    const auto spec = sweep::theorem_1_1(sharp::lambda_closed(), sharp::mu_closed());
    for (auto _ : state) benchmark::DoNotOptimize(sweep::run_openmp(spec, ratios));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(ratios.size()));
}

void BM_RatioScan(benchmark::State& state) {
    const auto grid = sweep::uniform_grid(1e-7, 1.0 - 1e-7, static_cast<std::size_t>(state.range(0)));
    const auto backend = state.range(1) == 0 ? sweep::Backend::serial : sweep::Backend::openmp;
    for (auto _ : state) benchmark::DoNotOptimize(sweep::scan_ratio(grid, backend));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_LambdaNumeric(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(sharp::lambda_numeric());
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepOpenMP)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RatioScan)->Args({1'000'000, 0})->Args({1'000'000, 1})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LambdaNumeric);

BENCHMARK_MAIN();

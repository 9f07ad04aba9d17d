#include <benchmark/benchmark.h>

#include <vector>

#include "greenreg/density.hpp"
#include "greenreg/green_kernel.hpp"
#include "greenreg/regression.hpp"

using namespace greenreg;

namespace {

SampleSet spread_samples(std::size_t n) {
    std::vector<double> xi(n), eta(n);
    for (std::size_t i = 0; i < n; ++i) {
        xi[i] = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        eta[i] = static_cast<double>(i % 7) - 3.0;
    }
    return SampleSet(std::move(xi), std::move(eta));
}

}  // namespace

static void GreenClosed(benchmark::State& state) {
    const KernelParams p(static_cast<double>(state.range(0)));
    double x = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(green_closed(p, x, 0.37));
        x = x < 0.9 ? x + 1e-3 : 0.1;
    }
}
BENCHMARK(GreenClosed)->Arg(1)->Arg(10)->Arg(100);

static void GreenSeries(benchmark::State& state) {
    const KernelParams p = KernelParams(1.0).with_series_terms(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(green_series(p, 0.3, 0.6));
}
BENCHMARK(GreenSeries)->RangeMultiplier(10)->Range(100, 100000);

static void CovMatrix(benchmark::State& state) {
    const SampleSet s = spread_samples(static_cast<std::size_t>(state.range(0)));
    const KernelParams p(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(build_cov_matrix(p, s));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(CovMatrix)->RangeMultiplier(2)->Range(5, 320)->Complexity();

static void PredictDefaultGrid(benchmark::State& state) {
    const SampleSet s = spread_samples(static_cast<std::size_t>(state.range(0)));
    const KernelParams p(10.0);
    const QueryGrid grid = QueryGrid::uniform(0.01);
    for (auto _ : state) benchmark::DoNotOptimize(predict(p, s, grid));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(PredictDefaultGrid)->RangeMultiplier(2)->Range(5, 80)->Complexity();

static void DensityMoments(benchmark::State& state) {
    const KernelParams p(static_cast<double>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(density_stats(p, 0.5));
}
BENCHMARK(DensityMoments)->Arg(1)->Arg(10);

BENCHMARK_MAIN();

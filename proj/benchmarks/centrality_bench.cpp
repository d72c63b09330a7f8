#include "fixtures.hpp"

#include <netrobust/centrality.hpp>
#include <netrobust/spectral.hpp>

#include <benchmark/benchmark.h>

using namespace netrobust;

static void BM_Centrality(benchmark::State &state) {
    const Graph &g = bench::scaleFree(state.range(0));
    const auto metric = kAllMetrics[state.range(1)];
    const double alpha = 0.9 / spectralRadius(g).value;
    for (auto _ : state)
        benchmark::DoNotOptimize(computeCentrality(g, metric, alpha).scores.data());
    state.SetLabel(std::string(toString(metric)));
}
BENCHMARK(BM_Centrality)
    ->ArgsProduct({{10000, 58228}, benchmark::CreateDenseRange(0, static_cast<long>(std::size(kAllMetrics)) - 1, 1)})
    ->Unit(benchmark::kMillisecond);

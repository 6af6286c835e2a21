#include <benchmark/benchmark.h>

#include "ips/graph.hpp"

namespace {

void BM_BuildGraph(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    for (auto _ : state) {
        auto g = ips::IntegralGraph::build(F);
        benchmark::DoNotOptimize(g.degree(0));
    }
}
BENCHMARK(BM_BuildGraph)->Arg(11)->Arg(23)->Arg(47);

void BM_SrgCount(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    auto g = ips::IntegralGraph::build(F);
    for (auto _ : state) {
        auto params = ips::srg_params(g);
        benchmark::DoNotOptimize(params.mu);
    }
}
BENCHMARK(BM_SrgCount)->Arg(13)->Arg(31);

} // namespace

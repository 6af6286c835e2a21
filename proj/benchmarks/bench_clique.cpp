#include <benchmark/benchmark.h>

#include "ips/search.hpp"

namespace {

void BM_MaximalCliques(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    auto lg = ips::local_graph(ips::IntegralGraph::build(F));
    for (auto _ : state) {
        std::size_t count = 0;
        ips::enum_maximal_cliques(lg, 0, [&](const std::vector<std::uint32_t>&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_MaximalCliques)->Arg(11)->Arg(13)->Arg(17);

void BM_Classify(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    auto g = ips::IntegralGraph::build(F);
    auto G = ips::classification_group(F, g);
    for (auto _ : state) {
        auto res = ips::classify(F, g, G);
        benchmark::DoNotOptimize(res.row.total());
    }
}
BENCHMARK(BM_Classify)->Arg(11)->Arg(13);

} // namespace

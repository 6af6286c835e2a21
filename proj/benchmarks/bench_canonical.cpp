#include <benchmark/benchmark.h>

#include "ips/constructions.hpp"
#include "ips/symmetry.hpp"

namespace {

// Canonicality scans dominate the classification; track the per-set cost.
void BM_CanonicalForm(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    auto g = ips::IntegralGraph::build(F);
    auto G = ips::classification_group(F, g);
    auto pw = ips::circle_set(F);
    for (auto _ : state) {
        auto form = ips::canonical_form(G, pw.points);
        benchmark::DoNotOptimize(form.codes.data());
    }
}
BENCHMARK(BM_CanonicalForm)->Arg(11)->Arg(19)->Arg(23);

void BM_SetStabiliser(benchmark::State& state) {
    ips::FieldCtx F(static_cast<std::uint32_t>(state.range(0)), 1);
    auto g = ips::IntegralGraph::build(F);
    auto G = ips::classification_group(F, g);
    auto pl = ips::line_set(F);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ips::aut_order_of_set(G, pl.points));
    }
}
BENCHMARK(BM_SetStabiliser)->Arg(11)->Arg(19);

} // namespace

#include <benchmark/benchmark.h>

#include "fanram/patterns.hpp"
#include "fanram/search.hpp"

using namespace fanram;

namespace {

struct Instance {
    Graph host;
    TargetPattern red;
    TargetPattern blue;
};

Instance instance(int which) {
    switch (which) {
        case 0: return {complete(6), TargetPattern::clique(3), TargetPattern::clique(3)};
        case 1: return {complete(6), TargetPattern::matching(2), TargetPattern::fan(2, 2)};
        case 2: return {complete(8), TargetPattern::clique(3), TargetPattern::clique(4)};
        default: return {complete(9), TargetPattern::clique(3), TargetPattern::clique(4)};
    }
}

void BM_Reference(benchmark::State& state) {
    const auto in = instance(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto r = reference::exists_free_coloring(in.host, in.red, in.blue, 2'000'000'000);
        benchmark::DoNotOptimize(r.coloring);
    }
}

void BM_Parallel(benchmark::State& state) {
    const auto in = instance(static_cast<int>(state.range(0)));
    SearchConfig cfg;
    cfg.thread_count_hint = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto r = exists_free_coloring(in.host, in.red, in.blue, cfg);
        benchmark::DoNotOptimize(r.coloring);
        state.counters["nodes"] = static_cast<double>(r.stats.nodes);
    }
}

void BM_NoIsoRejection(benchmark::State& state) {
    const auto in = instance(static_cast<int>(state.range(0)));
    SearchConfig cfg;
    cfg.iso_rejection_depth = 0;
    cfg.thread_count_hint = static_cast<int>(state.range(1));
    for (auto _ : state) {
        auto r = exists_free_coloring(in.host, in.red, in.blue, cfg);
        benchmark::DoNotOptimize(r.coloring);
    }
}

void BM_PackingCheck(benchmark::State& state) {
    SearchConfig cfg;
    cfg.thread_count_hint = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(packing_property_check(3, 4, 200, cfg).found);
}

void BM_ContainsFan(benchmark::State& state) {
    const Graph g = complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(contains_fan(g, 4, 15));
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Parallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NoIsoRejection)->ArgsProduct({{2, 3}, {1, 8}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PackingCheck)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ContainsFan)->Arg(60)->Arg(61)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

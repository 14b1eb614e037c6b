#include <benchmark/benchmark.h>

#include "chroma/census.hpp"
#include "chroma/completion.hpp"
#include "chroma/graph_io.hpp"

namespace {

void BM_ZetaCycle(benchmark::State& state) {
    chroma::Graph g = chroma::make_cycle(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(chroma::zeta(g).zeta);
}
BENCHMARK(BM_ZetaCycle)->Arg(8)->Arg(10)->Arg(12);

void BM_ZetaRandom(benchmark::State& state) {
    chroma::Graph g = chroma::make_random(static_cast<int>(state.range(0)), 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(chroma::zeta(g).zeta);
}
BENCHMARK(BM_ZetaRandom)->Arg(8)->Arg(10);

void BM_NearLucky(benchmark::State& state) {
    chroma::Graph g = chroma::make_random(static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state) benchmark::DoNotOptimize(chroma::near_lucky_coloring(g).completion_count);
}
BENCHMARK(BM_NearLucky)->Arg(16)->Arg(32)->Arg(48);

void BM_CountColorings(benchmark::State& state) {
    chroma::Graph g = chroma::make_random(static_cast<int>(state.range(0)), 0.5, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(chroma::count_proper_colorings(g, 5, g.order()));
}
BENCHMARK(BM_CountColorings)->Arg(10)->Arg(12);

void BM_CensusConnected(benchmark::State& state) {
    chroma::CensusOptions options;
    options.order = static_cast<int>(state.range(0));
    options.connected_only = true;
    for (auto _ : state) {
        auto summary = chroma::run_census(options, {});
        benchmark::DoNotOptimize(summary.graphs);
    }
}
BENCHMARK(BM_CensusConnected)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
    chroma::Graph g = chroma::make_random(static_cast<int>(state.range(0)), 0.5, 5);
    for (auto _ : state)
        benchmark::DoNotOptimize(chroma::parse_graph6(chroma::to_graph6(g)).size());
}
BENCHMARK(BM_Graph6RoundTrip)->Arg(30)->Arg(60);

}  // namespace

BENCHMARK_MAIN();

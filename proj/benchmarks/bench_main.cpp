#include <benchmark/benchmark.h>

#include "symdyn/random.hpp"
#include "symdyn/recon.hpp"

using namespace symdyn;

namespace {

SubshiftPresentation golden_mean() {
    return make_presentation(
        {"u", "v"},
        {{"u", "u", Symbol("0")}, {"u", "v", Symbol("1")}, {"v", "u", Symbol("0")}},
        {Symbol("0"), Symbol("1")});
}

void BM_words(benchmark::State& state) {
    SubshiftPresentation p = golden_mean();
    for (auto _ : state) benchmark::DoNotOptimize(words(p, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_words)->Arg(6)->Arg(10)->Arg(14);

void BM_consistency_check(benchmark::State& state) {
    SplitMix64 rng(42);
    FiniteDynSys sys = random_system(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(consistency_check(sys));
}
BENCHMARK(BM_consistency_check)->Arg(4)->Arg(8)->Arg(16);

void BM_reconstruct(benchmark::State& state) {
    TimeSeriesData x = word_functor(golden_mean(), static_cast<std::size_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(reconstruct(x, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_reconstruct)->Arg(4)->Arg(8)->Arg(12);

void BM_colimit(benchmark::State& state) {
    SplitMix64 rng(7);
    DynDiagram d;
    for (int i = 0; i < 3; ++i)
        d.nodes.push_back(random_system(static_cast<std::size_t>(state.range(0)), rng));
    DiagramArrow arrow{0, 0, {}};
    for (const auto& s : d.nodes[0].states()) arrow.map[s] = s;
    d.arrows.push_back(arrow);
    for (auto _ : state) benchmark::DoNotOptimize(colimit(d));
}
BENCHMARK(BM_colimit)->Arg(4)->Arg(16)->Arg(64);

} // namespace

BENCHMARK_MAIN();

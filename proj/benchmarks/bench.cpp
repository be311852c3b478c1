#include <benchmark/benchmark.h>

#include "ballot/counting.hpp"
#include "ballot/dynamics.hpp"
#include "ballot/enumeration.hpp"

using namespace ballot;

static void BM_EnumCodes(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_code(n, [&](const Code&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumCodes)->Arg(8)->Arg(10)->Arg(12);

static void BM_BallotTable(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        BallotTable table(n);
        benchmark::DoNotOptimize(table.at(n, 1));
    }
}
BENCHMARK(BM_BallotTable)->Arg(30)->Arg(100)->Arg(300);

static void BM_RankUnrankRoundTrip(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const Code c = sample_code(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(unrank_code(n, rank_code(c)));
    }
}
BENCHMARK(BM_RankUnrankRoundTrip)->Arg(16)->Arg(64)->Arg(256);

static void BM_Sample(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    CodeSampler sampler(n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sampler.next());
    }
}
BENCHMARK(BM_Sample)->Arg(16)->Arg(64)->Arg(256);

static void BM_ExactStats(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(exact_stats(n));
    }
}
BENCHMARK(BM_ExactStats)->Arg(8)->Arg(10);

BENCHMARK_MAIN();

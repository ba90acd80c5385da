// Serial reference vs OpenMP kernels for the exponential enumerations.
#include <benchmark/benchmark.h>

#include <random>

#include "brooks/at_engine.hpp"
#include "brooks/coloring.hpp"

namespace {

brooks::Orientation random_orientation(int n, int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<brooks::Edge> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(static_cast<std::size_t>(m));
    brooks::Graph g(n, pairs);
    return brooks::Orientation::from_mask(g, rng());
}

void BM_CensusSerial(benchmark::State& state) {
    auto d = random_orientation(10, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(brooks::eulerian_census(d, brooks::Kernel::serial));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_CensusParallel(benchmark::State& state) {
    auto d = random_orientation(10, static_cast<int>(state.range(0)), 42);
    for (auto _ : state) benchmark::DoNotOptimize(brooks::eulerian_census(d, brooks::Kernel::parallel));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << state.range(0)));
}

void BM_PetersenTrials(benchmark::State& state) {
    std::vector<brooks::Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    brooks::Graph petersen(10, e);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            brooks::random_degree_list_trial(petersen, 4, static_cast<int>(state.range(0)), 7, brooks::ListSizeMode::max_degree));
}

}  // namespace

BENCHMARK(BM_CensusSerial)->DenseRange(12, 20, 4);
BENCHMARK(BM_CensusParallel)->DenseRange(12, 20, 4);
BENCHMARK(BM_PetersenTrials)->Arg(1000);

BENCHMARK_MAIN();

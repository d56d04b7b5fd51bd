#include <benchmark/benchmark.h>

#include <random>
#include <tuple>

#include "mbe/all_bases.hpp"
#include "mbe/cut_space.hpp"
#include "mbe/cycle_space.hpp"
#include "mbe/min_basis_enum.hpp"

using namespace mbe;

namespace {

WeightedGraph random_graph(int n, int extra, Weight wlo, Weight whi,
                           unsigned seed) {
    std::mt19937 rng(seed);
    std::vector<std::tuple<int, int, Weight>> edges;
    std::uniform_int_distribution<Weight> weight(wlo, whi);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        edges.emplace_back(parent(rng), v, weight(rng));
    }
    std::uniform_int_distribution<int> vert(0, n - 1);
    for (int k = 0; k < extra; ++k) {
        int u = vert(rng), v = vert(rng);
        if (u != v) edges.emplace_back(std::min(u, v), std::max(u, v), weight(rng));
    }
    return make_graph(n, edges);
}

void BM_min_bases_stream(benchmark::State& state) {
    WeightedGraph g = random_graph(state.range(0), state.range(0), 1, 4, 7);
    for (auto _ : state) {
        OracleBundle oracles = make_cut_oracles(g);
        MinBasisEnumerator stream(oracles, 50);
        std::size_t count = 0;
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_min_bases_stream)->Arg(8)->Arg(12);

void BM_relevant_cuts(benchmark::State& state) {
    WeightedGraph g = random_graph(state.range(0), 2 * state.range(0), 0, 4, 9);
    for (auto _ : state) {
        RelevantCutEnumerator stream(g);
        std::size_t count = 0;
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_relevant_cuts)->Arg(8)->Arg(12);

void BM_relevant_cycles(benchmark::State& state) {
    WeightedGraph g = random_graph(state.range(0), state.range(0), 1, 4, 11);
    for (auto _ : state) {
        RelevantCycleEnumerator stream(g);
        std::size_t count = 0;
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_relevant_cycles)->Arg(8)->Arg(12);

void BM_all_rbases(benchmark::State& state) {
    for (auto _ : state) {
        AllRBasesEnumerator stream(static_cast<int>(state.range(0)));
        std::size_t count = 0;
        while (stream.next()) ++count;
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_all_rbases)->Arg(3)->Arg(4)->Arg(5);

} // namespace

BENCHMARK_MAIN();

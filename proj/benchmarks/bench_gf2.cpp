#include <benchmark/benchmark.h>

#include <random>

#include "mbe/gf2.hpp"

using namespace mbe;

namespace {

gf2::Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<BitVec> rows(r, BitVec(c));
    for (auto& row : rows) {
        for (std::size_t j = 0; j < c; ++j) {
            if (bit(rng)) row.set(j);
        }
    }
    return gf2::Matrix(std::move(rows));
}

void BM_rank(benchmark::State& state) {
    std::mt19937 rng(1);
    auto m = random_matrix(rng, state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2::rank(m));
    }
}
BENCHMARK(BM_rank)->Arg(16)->Arg(64)->Arg(256);

void BM_inverse(benchmark::State& state) {
    std::mt19937 rng(2);
    gf2::Matrix m = random_matrix(rng, state.range(0), state.range(0));
    while (gf2::det(m) == 0) m = random_matrix(rng, state.range(0), state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2::inverse(m));
    }
}
BENCHMARK(BM_inverse)->Arg(16)->Arg(64)->Arg(128);

void BM_row_replacement_minors(benchmark::State& state) {
    std::mt19937 rng(3);
    gf2::Matrix m = random_matrix(rng, 64, 64);
    while (gf2::det(m) == 0) m = random_matrix(rng, 64, 64);
    for (auto _ : state) {
        benchmark::DoNotOptimize(gf2::row_replacement_minors(m, 17));
    }
}
BENCHMARK(BM_row_replacement_minors);

} // namespace

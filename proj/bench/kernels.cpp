#include "toricic/corpus.hpp"
#include "toricic/decomposition.hpp"
#include "toricic/exact_linalg.hpp"
#include "toricic/ishida.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace toricic;

namespace {

// Square matrix of rank about size/2 with small integer entries.
IntMatrix low_rank_matrix(std::size_t size) {
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> entry(-4, 4);
    RationalMatrix a(size, size / 2), b(size / 2, size);
    for (std::size_t i = 0; i < size; ++i) {
        for (std::size_t j = 0; j < size / 2; ++j) a(i, j) = entry(rng);
    }
    for (std::size_t i = 0; i < size / 2; ++i) {
        for (std::size_t j = 0; j < size; ++j) b(i, j) = entry(rng);
    }
    return clear_denominators(multiply(a, b));
}

void rank_kernel(benchmark::State& state, std::size_t (*kernel)(IntMatrix)) {
    const auto m = low_rank_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernel(m));
}

void BM_RankSerial(benchmark::State& state) { rank_kernel(state, rank_serial); }
void BM_RankParallel(benchmark::State& state) { rank_kernel(state, rank_parallel); }
BENCHMARK(BM_RankSerial)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_IntervalsSerial(benchmark::State& state) {
    const auto cone = cone_of(cube_cone());
    for (auto _ : state) benchmark::DoNotOptimize(solve_intervals_serial(cone.lattice()));
}
void BM_IntervalsParallel(benchmark::State& state) {
    const auto cone = cone_of(cube_cone());
    for (auto _ : state) benchmark::DoNotOptimize(solve_intervals_parallel(cone.lattice()));
}
BENCHMARK(BM_IntervalsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IntervalsParallel)->Unit(benchmark::kMillisecond);

void omega_kernel(benchmark::State& state, ExecutionPolicy policy) {
    const auto sub = barycentric_subdivision(cone_of(cube_cone()));
    const int face = static_cast<int>(state.range(0)) == 0 ? 0 : sub.target.lattice().top();
    for (auto _ : state) benchmark::DoNotOptimize(omega_oracle(sub, face, policy));
}

void BM_OmegaSerial(benchmark::State& state) { omega_kernel(state, ExecutionPolicy::Serial); }
void BM_OmegaParallel(benchmark::State& state) { omega_kernel(state, ExecutionPolicy::Parallel); }
// 0: the zero face (largest complexes), 1: the whole cone.
BENCHMARK(BM_OmegaSerial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OmegaParallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "modrange/norms.hpp"
#include "modrange/verification.hpp"

using namespace modrange;

namespace {

ModuleOperator make_instance(int characters, int dim, std::uint64_t seed) {
    std::vector<int> dims(characters, dim);
    const ModuleShape shape{CharacterSpace{std::size_t(characters)}, dims};
    return random_operator(shape, OperatorClass::Generic, seed);
}

void BM_BlockNumericalRadius(benchmark::State& state) {
    const ModuleOperator T = make_instance(1, int(state.range(0)), 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(block_numerical_radius(T.blocks[0], int(state.range(1))));
}
BENCHMARK(BM_BlockNumericalRadius)
    ->Args({2, 720})
    ->Args({4, 720})
    ->Args({8, 720})
    ->Args({4, 180})
    ->Args({4, 2880});

void BM_ModuleNorm(benchmark::State& state) {
    const ModuleOperator T = make_instance(int(state.range(0)), int(state.range(1)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(module_norm(T));
}
BENCHMARK(BM_ModuleNorm)->Args({1, 4})->Args({3, 4})->Args({8, 8})->Args({64, 4});

void BM_ModuleNumericalRadius(benchmark::State& state) {
    const ModuleOperator T = make_instance(int(state.range(0)), int(state.range(1)), 3);
    for (auto _ : state) benchmark::DoNotOptimize(module_numerical_radius(T));
}
BENCHMARK(BM_ModuleNumericalRadius)->Args({1, 4})->Args({3, 4})->Args({8, 8});

void BM_MonteCarloSup(benchmark::State& state) {
    const ModuleOperator T = make_instance(3, 4, 4);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            monte_carlo_sup(T, SupQuantity::Norm, int(state.range(0)), 5));
}
BENCHMARK(BM_MonteCarloSup)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_SampleNumericalRange(benchmark::State& state) {
    const ModuleOperator T = make_instance(3, 4, 6);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            sample_numerical_range(T, int(state.range(0)), int(state.range(1)), 7));
}
BENCHMARK(BM_SampleNumericalRange)->Args({720, 2000})->Args({180, 200});

}  // namespace

BENCHMARK_MAIN();

// Blocked parallel kernel against the dense serial reference on bar
// differentials and random module maps.

#include "l2k/generators.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace l2k;

namespace {

AlgebraPtr bench_algebra(int which)
{
    const AlgebraPtr m2 = multi_matrix_algebra({2}, {Rational(1, 2)});
    switch (which) {
    case 0: return m2;
    case 1: return group_algebra(symmetric_group_3(), "S3");
    default: return tensor_algebra(group_algebra(cyclic_group(2), "Z/2"), m2);
    }
}

// d_n of the bar complex of algebra `which`.
ModuleMap bar_differential(int which, std::size_t n)
{
    return bar_complex(bench_algebra(which), n).differential(n);
}

void BM_BarReference(benchmark::State& state)
{
    const ModuleMap d = bar_differential(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(reference::dim_image(d));
}

void BM_BarBlocked(benchmark::State& state)
{
    const ModuleMap d = bar_differential(static_cast<int>(state.range(0)), static_cast<std::size_t>(state.range(1)));
    omp_set_num_threads(static_cast<int>(state.range(2)));
    for (auto _ : state) benchmark::DoNotOptimize(dim_image(d));
    state.counters["threads"] = static_cast<double>(state.range(2));
}

ModuleMap random_map(std::int64_t size)
{
    Rng rng(7);
    const AlgebraSample s = sample_of(bench_algebra(2));
    return random_module_map(rng, s, static_cast<std::size_t>(size), static_cast<std::size_t>(size));
}

void BM_RandomReference(benchmark::State& state)
{
    const ModuleMap t = random_map(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(reference::dim_image(t));
}

void BM_RandomBlocked(benchmark::State& state)
{
    const ModuleMap t = random_map(state.range(0));
    omp_set_num_threads(static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(dim_image(t));
}

const int kMaxThreads = omp_get_max_threads();

}  // namespace

// {algebra, degree[, threads]}: algebra 0 = M2, 1 = S3, 2 = Z/2 ⊙ M2.
BENCHMARK(BM_BarReference)->Args({0, 2})->Args({1, 1})->Args({2, 1})->Args({0, 3})->Args({2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BarBlocked)
    ->Args({0, 2, 1})->Args({1, 1, 1})->Args({2, 1, 1})
    ->Args({0, 3, 1})->Args({2, 2, 1})
    ->Args({0, 2, kMaxThreads})->Args({1, 1, kMaxThreads})->Args({2, 1, kMaxThreads})
    ->Args({0, 3, kMaxThreads})->Args({2, 2, kMaxThreads})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomReference)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomBlocked)->Args({2, 1})->Args({4, 1})->Args({4, kMaxThreads})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

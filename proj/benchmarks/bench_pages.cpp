#include <benchmark/benchmark.h>

#include "polyss/generate.hpp"
#include "polyss/morphism.hpp"
#include "polyss/spectral.hpp"

using namespace polyss;

namespace {

Polycomplex instance(std::size_t k, int extent, std::uint64_t p)
{
    Rng rng(k * 100 + static_cast<std::uint64_t>(extent));
    DirectSumShape shape;
    shape.k = k;
    shape.extent = extent;
    return random_direct_sum_polycomplex(FieldSpec::prime(p), shape, rng);
}

void BM_totalize(benchmark::State& state)
{
    const auto v = instance(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)), 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(totalize(v));
}
BENCHMARK(BM_totalize)->Args({2, 5})->Args({3, 3})->Args({4, 2});

void BM_compute_pages(benchmark::State& state)
{
    const auto v = instance(static_cast<std::size_t>(state.range(0)), static_cast<int>(state.range(1)),
                            static_cast<std::uint64_t>(state.range(2)));
    const auto fc = apply_filtration(totalize(v), IndexSubsetFiltration({1}, v.k()));
    for (auto _ : state)
        benchmark::DoNotOptimize(compute_pages(fc));
    std::size_t total = 0;
    for (auto d : fc.complex().dims())
        total += d;
    state.counters["dim_T"] = static_cast<double>(total);
}
BENCHMARK(BM_compute_pages)->Args({2, 4, 2})->Args({2, 5, 2})->Args({2, 5, 65521})->Args({3, 3, 2})->Args({4, 2, 2})
    ->Unit(benchmark::kMillisecond);

void BM_inclusion_morphism(benchmark::State& state)
{
    const auto v = instance(3, 3, 2);
    const IndexSubsetFiltration a({1}, 3), b({1, 2}, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(inclusion_morphism(v, a, b));
}
BENCHMARK(BM_inclusion_morphism)->Unit(benchmark::kMillisecond);

} // namespace

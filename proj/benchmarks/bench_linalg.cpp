#include <benchmark/benchmark.h>

#include "polyss/generate.hpp"
#include "polyss/linalg.hpp"

using namespace polyss;

namespace {

FieldSpec field_for(std::int64_t code) { return code == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint64_t>(code)); }

void BM_rref(benchmark::State& state)
{
    const auto f = field_for(state.range(1));
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    const Matrix m = random_matrix(f, n, n, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->ArgsProduct({{8, 16, 32, 64}, {2, 65521, 0}});

void BM_intersect(benchmark::State& state)
{
    const auto f = FieldSpec::prime(65521);
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    const auto u = Subspace::span(random_matrix(f, n, n / 2 + 1, rng));
    const auto v = Subspace::span(random_matrix(f, n, n / 2 + 1, rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(intersect(u, v));
}
BENCHMARK(BM_intersect)->RangeMultiplier(2)->Range(8, 64);

void BM_subquotient(benchmark::State& state)
{
    const auto f = FieldSpec::rationals();
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(3);
    const auto z = Subspace::span(random_matrix_of_rank(f, n, n, n * 3 / 4, rng));
    const auto b = Subspace::span(z.basis() * random_matrix_of_rank(f, z.dim(), z.dim(), z.dim() / 3, rng));
    for (auto _ : state)
        benchmark::DoNotOptimize(Subquotient(z, b));
}
BENCHMARK(BM_subquotient)->RangeMultiplier(2)->Range(8, 32);

} // namespace

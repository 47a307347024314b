#include <benchmark/benchmark.h>

#include <random>

#include "knotsurg/knotsurg.hpp"

using namespace knotsurg;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng, int degree)
{
    std::uniform_int_distribution<int> coef(-9, 9);
    std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
    for (auto& x : c)
        x = coef(rng);
    c.back() = 1;
    return LaurentPoly(-degree / 2, std::move(c));
}

// fresh index per iteration, the memo is process-wide
void BM_CyclotomicPoly(benchmark::State& state)
{
    const auto span = static_cast<std::uint64_t>(state.range(0));
    std::uint64_t next = 1;
    set_max_cyclotomic_index(1u << 22);
    for (auto _ : state) {
        benchmark::DoNotOptimize(cyclotomic_poly(CyclotomicIndex(span + next)));
        next += 1;
    }
}
BENCHMARK(BM_CyclotomicPoly)->Arg(1000)->Arg(10000)->Iterations(20);

void BM_NormD(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    const LaurentPoly f = random_poly(rng, 8);
    const CyclotomicIndex d(static_cast<std::uint64_t>(state.range(0)));
    (void)cyclotomic_poly(d);
    for (auto _ : state)
        benchmark::DoNotOptimize(norm_d(f, d));
}
BENCHMARK(BM_NormD)->Arg(5)->Arg(30)->Arg(210)->Arg(1000);

void BM_NormTotal(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    const LaurentPoly f = random_poly(rng, 8);
    const CyclotomicIndex d(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(norm_total(f, d));
}
BENCHMARK(BM_NormTotal)->Arg(30)->Arg(360);

void BM_Resultant(benchmark::State& state)
{
    std::mt19937_64 rng(3);
    const int n = static_cast<int>(state.range(0));
    const IntPoly f = to_shifted_int_poly(random_poly(rng, n));
    const IntPoly g = to_shifted_int_poly(random_poly(rng, n));
    for (auto _ : state)
        benchmark::DoNotOptimize(resultant(f, g));
    state.SetComplexityN(n);
}
BENCHMARK(BM_Resultant)->RangeMultiplier(2)->Range(8, 128)->Complexity();

} // namespace

BENCHMARK_MAIN();

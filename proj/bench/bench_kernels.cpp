// Serial reference kernels against the memoized / OpenMP ones.

#include <benchmark/benchmark.h>

#include <random>

#include "qmb/fock.hpp"
#include "qmb/qmatrices.hpp"

using namespace qmb;

namespace {

Combination sample(const Algebra& alg, int degree, int terms)
{
    std::mt19937_64 rng(1234);
    return random_combination(alg, degree, terms, rng);
}

void BM_NormalFormReference(benchmark::State& state)
{
    const auto alg = algebra(AlgebraKind::pol(static_cast<int>(state.range(0))));
    const Combination expr = sample(*alg, 6, 8);
    for (auto _ : state) {
        benchmark::DoNotOptimize(alg->normal_form_reference(expr, Strategy::LeftmostInnermost));
    }
}

void BM_NormalFormMemoized(benchmark::State& state)
{
    const auto alg = algebra(AlgebraKind::pol(static_cast<int>(state.range(0))));
    const Combination expr = sample(*alg, 6, 8);
    alg->clear_caches();
    for (auto _ : state) {
        benchmark::DoNotOptimize(alg->normal_form(expr));
    }
}

void BM_MultiplyYK(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const NcPoly y1 = build_y(n, 1);
    const NcPoly yn = build_y(n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(y1 * yn);
    }
}

void BM_FockApplyReference(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const NcPoly y = build_y(n, 1);
    const FockVector u = u_lambda(n, Partition(std::vector<int>(static_cast<std::size_t>(n), 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock_apply_reference(y, u));
    }
}

void BM_FockApply(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const NcPoly y = build_y(n, 1);
    const FockVector u = u_lambda(n, Partition(std::vector<int>(static_cast<std::size_t>(n), 2)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(fock_apply(y, u));
    }
}

} // namespace

BENCHMARK(BM_NormalFormReference)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NormalFormMemoized)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MultiplyYK)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FockApplyReference)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_FockApply)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

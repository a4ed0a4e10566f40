#include <benchmark/benchmark.h>

#include "klforge/kl.hpp"

using namespace klforge;

namespace {

void BM_reference_pair(benchmark::State& state) {
    const Permutation x = Permutation::identity(6), y{4, 5, 6, 1, 2, 3};
    for (auto _ : state) {
        ReferenceKL ref;
        benchmark::DoNotOptimize(ref.kl_poly(x, y));
    }
}
BENCHMARK(BM_reference_pair)->Unit(benchmark::kMillisecond);

/// Fresh table per iteration, so every column is recomputed.
void BM_engine_pair(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Permutation x = Permutation::identity(n);
    const Permutation y = replicate_perm(Permutation::longest(n / 2), 2);
    for (auto _ : state) {
        KLTable table(static_cast<int>(state.range(1)));
        benchmark::DoNotOptimize(table.kl_poly(x, y));
    }
    state.SetLabel("threads=" + std::to_string(state.range(1)));
}
BENCHMARK(BM_engine_pair)->Args({6, 1})->Args({8, 1})->Args({8, 4})->Unit(benchmark::kMillisecond);

void BM_parabolic_sum(benchmark::State& state) {
    const Permutation e = Permutation::identity(3), w0 = Permutation::longest(3);
    for (auto _ : state) {
        KLTable table(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(parabolic_kl_q(table, e, w0, 3));
    }
    state.SetLabel("threads=" + std::to_string(state.range(0)));
}
BENCHMARK(BM_parabolic_sum)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

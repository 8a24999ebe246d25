#include <benchmark/benchmark.h>

#include "trexp/closed_form.hpp"
#include "trexp/pauli.hpp"
#include "trexp/reduction.hpp"
#include "trexp/word_measure.hpp"

using namespace trexp;

static void BM_HermExp(benchmark::State& state) {
    const HermitianMatrix2 h{0.7, -0.3, {0.4, 0.2}};
    for (auto _ : state) benchmark::DoNotOptimize(herm_exp(h));
}
BENCHMARK(BM_HermExp);

static void BM_Reduce(benchmark::State& state) {
    const HermitianMatrix2 a{1.2, -0.5, {0.3, 0.8}};
    const HermitianMatrix2 b{-0.4, 0.9, {1.1, -0.2}};
    for (auto _ : state) benchmark::DoNotOptimize(reduce(a, b));
}
BENCHMARK(BM_Reduce);

static void BM_BuildRhoN(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_rho_N(n, 2.0));
    state.SetComplexityN(n);
}
BENCHMARK(BM_BuildRhoN)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_EvalEnDirect(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eval_E_N_direct(1.0, 1.0, 1.0, n));
}
BENCHMARK(BM_EvalEnDirect)->Range(64, 4096);

static void BM_LaplaceEval(benchmark::State& state) {
    const auto m = rho_closed(1.0);
    for (auto _ : state) benchmark::DoNotOptimize(laplace_eval(m, 1.0, +1));
}
BENCHMARK(BM_LaplaceEval);

BENCHMARK_MAIN();

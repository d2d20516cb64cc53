#include <benchmark/benchmark.h>

#include "qdyson/ctengine.hpp"
#include "qdyson/identities.hpp"
#include "qdyson/recursion.hpp"
#include "qdyson/splitting.hpp"
#include "qdyson/symfun.hpp"

using namespace qdyson;

namespace {

std::vector<int> exponents(int n, int ai) { return std::vector<int>(static_cast<size_t>(n), ai); }

DysonInstance spread(int n, int ai, int n0) {
    std::vector<int> v(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = (i * 2 + 1) % 4;
    return DysonInstance{exponents(n, ai), n0, v, Partition::sorted_from(v)};
}

}  // namespace

static void BM_QBinomial(benchmark::State& state) {
    const auto n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(q_binomial(n, n / 2));
}
BENCHMARK(BM_QBinomial)->Arg(8)->Arg(16)->Arg(32);

static void BM_Kernel(benchmark::State& state) {
    const auto a = exponents(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(dyson_product(a, 0));
}
BENCHMARK(BM_Kernel)->Args({3, 2})->Args({3, 3})->Args({4, 2})->Args({4, 3});

static void BM_Brute(benchmark::State& state) {
    const DysonInstance inst = spread(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(d_brute(inst));
}
BENCHMARK(BM_Brute)->Arg(2)->Arg(3)->Arg(4);

static void BM_BruteCached(benchmark::State& state) {
    const DysonInstance inst = spread(static_cast<int>(state.range(0)), 2, 1);
    DysonOracle oracle(inst.a, inst.n0);
    (void)oracle.d(inst.v, inst.lambda);
    for (auto _ : state) benchmark::DoNotOptimize(oracle.d(inst.v, inst.lambda));
}
BENCHMARK(BM_BruteCached)->Arg(2)->Arg(3)->Arg(4);

static void BM_Recursive(benchmark::State& state) {
    const DysonInstance inst = spread(static_cast<int>(state.range(0)), 2, 1);
    for (auto _ : state) benchmark::DoNotOptimize(d_recursive(inst, Policy::strict));
}
BENCHMARK(BM_Recursive)->Arg(2)->Arg(3)->Arg(4);

static void BM_SchurJacobiTrudi(benchmark::State& state) {
    const std::vector<int> a{2, 2};
    const Alphabet alph = build_alphabet(a, 0);
    const Vars vars = dyson_vars(2);
    const Partition lambda({static_cast<int>(state.range(0)), 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(schur_jt(lambda, alph, vars));
}
BENCHMARK(BM_SchurJacobiTrudi)->Arg(1)->Arg(2)->Arg(3);

static void BM_SchurBialternant(benchmark::State& state) {
    const std::vector<int> a{2, 2};
    const Alphabet alph = build_alphabet(a, 0);
    const Vars vars = dyson_vars(2);
    const auto letters = alphabet_terms(alph, vars);
    const Partition lambda({static_cast<int>(state.range(0)), 1, 1});
    for (auto _ : state) benchmark::DoNotOptimize(schur_bialternant(lambda, letters, vars));
}
BENCHMARK(BM_SchurBialternant)->Arg(1)->Arg(2)->Arg(3);

static void BM_VerifySplit(benchmark::State& state) {
    const auto a = exponents(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(verify_split(a, 0, 1));
}
BENCHMARK(BM_VerifySplit)->Arg(1)->Arg(2)->Arg(3);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <fermatsha/cache.hpp>
#include <fermatsha/lambda_modules.hpp>
#include <fermatsha/scan.hpp>
#include <fermatsha/verify.hpp>

using namespace fermatsha;

static void BM_bernoulli_table(benchmark::State& state) {
    const OddPrime p(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_table(p));
}
BENCHMARK(BM_bernoulli_table)->Arg(101)->Arg(1009)->Arg(10007)->Unit(benchmark::kMillisecond);

static void BM_bernoulli_single(benchmark::State& state) {
    // primes ≡ 3 mod 4, so the sweep index (p+1)/2 is even
    const OddPrime p(state.range(0));
    const int64_t k = (p.value() + 1) / 2;
    for (auto _ : state) benchmark::DoNotOptimize(bernoulli_mod_single(p, k));
}
BENCHMARK(BM_bernoulli_single)->Arg(1019)->Arg(10007)->Arg(100003);

static void BM_reduction_type(benchmark::State& state) {
    const OddPrime p(state.range(0));
    const QuotientTriple t = make_triple(p, 1, (p.value() - 1) / 2);
    for (auto _ : state) benchmark::DoNotOptimize(reduction_type(t));
}
BENCHMARK(BM_reduction_type)->Arg(101)->Arg(10007)->Arg(1000003);

static void BM_scan_prime(benchmark::State& state) {
    const OddPrime p(101);
    const BernoulliTable table = bernoulli_table(p);
    const int jobs = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(scan_prime(p, table, false, jobs));
}
BENCHMARK(BM_scan_prime)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_bk_solve(benchmark::State& state) {
    const OddPrime p(state.range(0));
    const BernoulliTable table = bernoulli_table(p);
    const QuotientTriple t = make_triple(p, 1, 1);
    for (auto _ : state) benchmark::DoNotOptimize(verify_bk_lemma(t, table));
}
BENCHMARK(BM_bk_solve)->Arg(23)->Arg(101);

static void BM_pairing_lemmas(benchmark::State& state) {
    const PairedLambdaModule mod = hyperbolic_pairing({{4, 3, 1}}, 19);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_annihilator(mod, 2));
        benchmark::DoNotOptimize(verify_perfect_restriction(mod, 2, 2));
    }
}
BENCHMARK(BM_pairing_lemmas);

BENCHMARK_MAIN();

#include "cychains/generators.hpp"
#include "cychains/linfty.hpp"

#include <benchmark/benchmark.h>

using namespace cychains;

namespace {

SuiteConfig bench_config() {
    SuiteConfig cfg;
    cfg.trials = 1;
    return cfg;
}

void BM_laurent_mul(benchmark::State& state) {
    SuiteConfig cfg = bench_config();
    auto rng = make_rng(7, "bench/laurent_mul", 0);
    Gen g(rng, cfg);
    LaurentPoly a = g.poly(4), b = g.poly(4);
    for (auto _ : state) {
        LaurentPoly c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_laurent_mul);

void BM_schouten(benchmark::State& state) {
    SuiteConfig cfg = bench_config();
    auto rng = make_rng(7, "bench/schouten", 0);
    Gen g(rng, cfg);
    MultiVector a = g.multivector(2, 3), b = g.multivector(2, 3);
    for (auto _ : state) {
        MultiVector c = schouten(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_schouten);

void BM_gerstenhaber(benchmark::State& state) {
    SuiteConfig cfg = bench_config();
    auto rng = make_rng(7, "bench/gerstenhaber", 0);
    Gen g(rng, cfg);
    MultiDiffOp a = g.cochain(2, 2, 2), b = g.cochain(3, 2, 2);
    for (auto _ : state) {
        MultiDiffOp c = gerstenhaber(a, b);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_gerstenhaber);

void BM_square_residual_arity3(benchmark::State& state) {
    SuiteConfig cfg = bench_config();
    auto rng = make_rng(7, "bench/square_residual", 0);
    Gen g(rng, cfg);
    VolumeForm vol = VolumeForm::standard(cfg.dim);
    AlgebraFamily<UMultiVector> q = schouten_algebra_family(vol);
    std::vector<Graded<UMultiVector>> xs;
    for (int i = 0; i < 3; ++i) {
        int deg = g.umv_degree();
        xs.push_back(Graded<UMultiVector>{g.umultivector(deg, 2), deg});
    }
    std::span<const Graded<UMultiVector>> span_xs(xs.data(), xs.size());
    for (auto _ : state) {
        UMultiVector r = coderivation_square_residual(q, span_xs);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_square_residual_arity3);

void BM_chain_action(benchmark::State& state) {
    SuiteConfig cfg = bench_config();
    auto rng = make_rng(7, "bench/chain_action", 0);
    Gen g(rng, cfg);
    MultiDiffOp d = g.cochain(2, 2, 2);
    HochChain c = g.chain(3, 2);
    for (auto _ : state) {
        HochChain r = cochain_action(d, c);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_chain_action);

} // namespace

BENCHMARK_MAIN();

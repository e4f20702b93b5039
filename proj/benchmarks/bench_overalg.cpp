#include <benchmark/benchmark.h>

#include "overalg/hahn.hpp"
#include "overalg/kernel.hpp"
#include "overalg/sampling.hpp"
#include "overalg/spectral_ops.hpp"

using namespace overalg;

static void BM_kernel_eval(benchmark::State& state) {
    const Alpha alpha(2.0);
    const Complex z(0.4, 0.3), u(-0.2, 0.5), s(1.3, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(kernel_eval(0.7, s, z, u, alpha));
}
BENCHMARK(BM_kernel_eval);

static void BM_kernel_coeff(benchmark::State& state) {
    const Alpha alpha(2.0);
    const Complex s(1.3, 0.4);
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(kernel_coeff_A(k, k, s, alpha));
}
BENCHMARK(BM_kernel_coeff)->Arg(2)->Arg(8)->Arg(16);

static void BM_transform_eval(benchmark::State& state) {
    const Alpha alpha(2.0);
    Rng rng(1);
    const CoefMatrix f = random_matrix(rng, alpha, static_cast<int>(state.range(0)));
    const SpectralFunction F = transform(f);
    const Complex s(1.1, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(F.eval(0.9, s));
}
BENCHMARK(BM_transform_eval)->Arg(4)->Arg(8);

static void BM_quadrature_transform(benchmark::State& state) {
    const Alpha alpha(2.0);
    const CoefMatrix f = CoefMatrix::monomial(alpha, 2, 1);
    const Complex s(1.1, 0.0);
    for (auto _ : state) benchmark::DoNotOptimize(quadrature_transform(f, 0.9, s, 1e-9));
}
BENCHMARK(BM_quadrature_transform)->Unit(benchmark::kMillisecond);

static void BM_apply_spectral(benchmark::State& state) {
    const Alpha alpha(2.0);
    Rng rng(2);
    const SpectralFunction F = transform(random_matrix(rng, alpha, 6));
    const Complex s(1.7, 0.0);
    for (auto _ : state) {
        const SpectralFunction G = apply_spectral(SpectralOp::Q1, F);
        benchmark::DoNotOptimize(G.eval(0.4, s));
    }
}
BENCHMARK(BM_apply_spectral);

static void BM_plancherel_weight(benchmark::State& state) {
    const Alpha alpha(2.75);
    double s = 0.0;
    for (auto _ : state) {
        s += 1e-3;
        benchmark::DoNotOptimize(plancherel_weight(s, alpha));
    }
}
BENCHMARK(BM_plancherel_weight);

static void BM_parseval_check(benchmark::State& state) {
    const Alpha alpha(2.0);
    Rng rng(3);
    const CoefMatrix f = random_matrix(rng, alpha, 3);
    for (auto _ : state) benchmark::DoNotOptimize(parseval_check(f, -1.0, 1e-10).ratio);
}
BENCHMARK(BM_parseval_check)->Unit(benchmark::kMillisecond);

static void BM_cdh_eval(benchmark::State& state) {
    const CdhParams p{0.5, 0.5, 1.5};
    const Complex s(1.9, 0.0);
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(cdh_eval(n, p, s));
}
BENCHMARK(BM_cdh_eval)->Arg(4)->Arg(10);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cmroots/classpoly.hpp"

using namespace cmroots;

static void BM_JInvariant(benchmark::State& state) {
    const mpfr_prec_t prec = state.range(0);
    BigComplex tau = form_to_tau(QuadForm{1, 1, 4}, prec + 64); /* D = -15 */
    for (auto _ : state) {
        BigComplex j = j_invariant(tau, prec);
        benchmark::DoNotOptimize(j);
    }
}
BENCHMARK(BM_JInvariant)->Arg(128)->Arg(512)->Arg(2048);

static void BM_HilbertClassPolynomial(benchmark::State& state) {
    Discriminant d(-state.range(0));
    for (auto _ : state) {
        IntPolynomial H = hilbert_class_polynomial(d);
        benchmark::DoNotOptimize(H.coeffs.data());
    }
}
BENCHMARK(BM_HilbertClassPolynomial)->Arg(23)->Arg(163)->Arg(499)->Arg(1999);

BENCHMARK_MAIN();

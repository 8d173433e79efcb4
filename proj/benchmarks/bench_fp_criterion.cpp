#include <benchmark/benchmark.h>

#include "cmroots/classpoly.hpp"
#include "cmroots/criterion.hpp"
#include "cmroots/fp_poly.hpp"
#include "cmroots/primes.hpp"

using namespace cmroots;

static void BM_CountRoots(benchmark::State& state) {
    Discriminant d(-static_cast<std::int64_t>(state.range(0)));
    IntPolynomial H = hilbert_class_polynomial(d);
    FpPoly f = reduce_mod_p(H, 1999);
    for (auto _ : state) {
        std::uint64_t n = count_fp_roots(f);
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_CountRoots)->Arg(163)->Arg(479)->Arg(1991);

static void BM_Kronecker(benchmark::State& state) {
    std::int64_t a = -1048575;
    std::int64_t n = 999999999989LL; /* prime */
    for (auto _ : state) {
        int k = kronecker(a, n);
        benchmark::DoNotOptimize(k);
    }
}
BENCHMARK(BM_Kronecker);

static void BM_LocalNormOracle(benchmark::State& state) {
    Discriminant d(-4 * 499); /* ell = 499 forces a full residue search */
    std::uint64_t p = 1997;
    while (!is_prime_u64(p) || !is_inert(d, p)) p += 2;
    for (auto _ : state) {
        bool s = local_norm_solvable(d, p, 499);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_LocalNormOracle);

BENCHMARK_MAIN();

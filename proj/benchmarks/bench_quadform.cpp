#include <benchmark/benchmark.h>

#include "cmroots/quadform.hpp"

using namespace cmroots;

static void BM_EnumerateClassGroup(benchmark::State& state) {
    Discriminant d(-state.range(0));
    for (auto _ : state) {
        ClassGroupTable table = enumerate_class_group(d);
        benchmark::DoNotOptimize(table.forms.data());
    }
}
BENCHMARK(BM_EnumerateClassGroup)->Arg(15)->Arg(499)->Arg(4999)->Arg(9999);

static void BM_Compose(benchmark::State& state) {
    Discriminant d(-state.range(0));
    ClassGroupTable table = enumerate_class_group(d);
    const QuadForm f = table.forms[table.h() / 2];
    const QuadForm g = table.forms.back();
    for (auto _ : state) {
        QuadForm r = compose(f, g);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Compose)->Arg(499)->Arg(9999);

static void BM_Reduce(benchmark::State& state) {
    const QuadForm f{3, 302, 7602}; /* (3,2,2) of D=-20 translated by 50 */
    for (auto _ : state) {
        QuadForm r = reduce(f);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_Reduce);

BENCHMARK_MAIN();

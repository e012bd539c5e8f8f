// Serial reference against the OpenMP kernels. Arg 0 = serial, 1 = parallel.
// On a single core the two should match; the gap shows scheduling overhead.

#include <benchmark/benchmark.h>

#include "coideal/coideal.hpp"

using namespace coideal;

namespace {

Scalar Q(long a) { return Scalar(nullptr, a); }

Cocycle cube_i() {
    auto i = Scalar::generator(ScalarDomain::cyclotomic(4));
    return model_cube(-i, i);
}

QuotientOptions opts(const benchmark::State& s) {
    QuotientOptions o;
    o.parallel = s.range(0) != 0;
    return o;
}

void BM_ExactQuotient_T4(benchmark::State& s) {
    Cocycle c = constant(transpositions(4), Q(-1));
    for (auto _ : s) {
        auto q = make_exact_quotient(c, opts(s));
        q.compute_until_zero(20);
        benchmark::DoNotOptimize(q.dims());
    }
}

void BM_ModQuotient_Cube(benchmark::State& s) {
    Cocycle c = model_cube(Q(1), Q(-1));
    for (auto _ : s) {
        auto q = make_mod_quotient(c, 0, 0, opts(s));
        q.compute_through(5);
        benchmark::DoNotOptimize(q.dims());
    }
}

void BM_MaximalCoideal_Cube(benchmark::State& s) {
    auto q = make_mod_quotient(cube_i(), 0, 0, opts(s));
    q.compute_through(5);
    for (auto _ : s) {
        auto K = maximal_coideal(q, {0, 1, 2}, 5);
        benchmark::DoNotOptimize(K.dims());
    }
}

}  // namespace

BENCHMARK(BM_ExactQuotient_T4)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ModQuotient_Cube)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalCoideal_Cube)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

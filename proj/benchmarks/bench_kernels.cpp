#include "wilsonline/conf.hpp"
#include "wilsonline/laurent.hpp"
#include "wilsonline/matrix.hpp"
#include "wilsonline/rng.hpp"
#include "wilsonline/surface.hpp"

#include <benchmark/benchmark.h>

using namespace wilsonline;

namespace {

LaurentPoly random_poly(RatSampler& rng, int nvars, int terms) {
    LaurentPoly p(nvars);
    for (int t = 0; t < terms; ++t) {
        LaurentPoly::Exponents e(nvars);
        for (int& x : e) x = rng.uniform_int(-3, 3);
        p.add_term(e, rng.nonzero_rational(5));
    }
    return p;
}

void BM_LaurentMul(benchmark::State& state) {
    RatSampler rng(1);
    LaurentPoly a = random_poly(rng, 4, 24);
    LaurentPoly b = random_poly(rng, 4, 24);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_LaurentMul);

void BM_BareissDet8(benchmark::State& state) {
    RatSampler rng(2);
    RatMatrix m(8, 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m.at(i, j) = rng.rational(9);
    for (auto _ : state) benchmark::DoNotOptimize(m.det());
}
BENCHMARK(BM_BareissDet8);

void BM_WilsonMatrix(benchmark::State& state, const char* model_name) {
    const GroupModel& model = GroupModel::by_name(model_name);
    RatSampler rng(3);
    QuadConfig cfg = sample_quad_config(model, rng);
    for (auto _ : state) benchmark::DoNotOptimize(wilson_matrix(cfg));
}
BENCHMARK_CAPTURE(BM_WilsonMatrix, sl3, "SL3");
BENCHMARK_CAPTURE(BM_WilsonMatrix, sp4, "SP4");

void BM_MutationWalk(benchmark::State& state) {
    Seed seed = figure_quiver("A2-quad-1").quiver.to_seed();
    for (auto _ : state) {
        Seed s = seed;
        for (int i = 0; i < 8; ++i) s = mutate_seed(s, i % s.m);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_MutationWalk);

} // namespace

BENCHMARK_MAIN();

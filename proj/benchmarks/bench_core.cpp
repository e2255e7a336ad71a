#include <benchmark/benchmark.h>

#include "ttd/designs.hpp"
#include "ttd/polyspace.hpp"
#include "ttd/rng.hpp"
#include "ttd/search.hpp"

using namespace ttd;

static void BM_Potential(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Configuration cfg = random_unit_configuration(Field::H, 2, n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(potential(cfg, 2));
    }
}
BENCHMARK(BM_Potential)->Arg(8)->Arg(32)->Arg(128);

static void BM_PotentialGradient(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Configuration cfg = random_unit_configuration(Field::H, 2, n, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(potential_gradient(cfg, 2));
    }
}
BENCHMARK(BM_PotentialGradient)->Arg(8)->Arg(32);

static void BM_KernelPoly(benchmark::State& state) {
    const int t = static_cast<int>(state.range(0));
    Rng rng(11);
    const Vector w = random_unit_vector(rng, Field::H, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernel_poly(w, Field::H, t));
    }
}
BENCHMARK(BM_KernelPoly)->Arg(1)->Arg(2)->Arg(3);

static void BM_Apolar(benchmark::State& state) {
    Rng rng(13);
    const Poly f = kernel_poly(random_unit_vector(rng, Field::H, 2), Field::H, 2);
    const Poly g = kernel_poly(random_unit_vector(rng, Field::H, 2), Field::H, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(apolar(f, g, 2, 4));
    }
}
BENCHMARK(BM_Apolar);

static void BM_HomttRank(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(homtt_dim_by_rank(Field::H, 2, 2, 40, 3));
    }
}
BENCHMARK(BM_HomttRank);

static void BM_VerifyMub(benchmark::State& state) {
    const Configuration mub = mub_family(Field::H);
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify(mub, 3));
    }
}
BENCHMARK(BM_VerifyMub);

static void BM_SearchRestart(benchmark::State& state) {
    SearchOptions opts;
    opts.field = Field::H;
    opts.dim = 2;
    opts.n = 6;
    opts.t = 2;
    opts.restarts = 1;
    opts.max_iters = 500;
    opts.seed = 20240811;
    for (auto _ : state) {
        benchmark::DoNotOptimize(minimize(opts));
    }
}
BENCHMARK(BM_SearchRestart);

BENCHMARK_MAIN();

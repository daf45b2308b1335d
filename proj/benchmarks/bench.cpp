#include <benchmark/benchmark.h>

#include <cmath>

#include "platelab/data.hpp"
#include "platelab/decay.hpp"
#include "platelab/quadrature.hpp"
#include "platelab/symbol.hpp"

using namespace platelab;

// kernel evaluation across the branches (the inner loop of every norm)
static void BM_KernelPair(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        r += 0.01;
        if (r > 20.0) r = 0.0;
        benchmark::DoNotOptimize(kernel_pair(12.5, r));
    }
}
BENCHMARK(BM_KernelPair);

static void BM_KernelPairCriticalBand(benchmark::State& state) {
    double z = zeta_root();
    double eps = 0.0;
    for (auto _ : state) {
        eps = (eps < 4e-7) ? eps + 1e-8 : 0.0;
        benchmark::DoNotOptimize(kernel_pair(12.5, z + eps));
    }
}
BENCHMARK(BM_KernelPairCriticalBand);

static void BM_CharacteristicRoots(benchmark::State& state) {
    double r = 0.0;
    for (auto _ : state) {
        r += 0.003;
        if (r > 30.0) r = 0.0;
        benchmark::DoNotOptimize(characteristic_roots(r));
    }
}
BENCHMARK(BM_CharacteristicRoots);

// region norm of a solution snapshot, the dominant cost of a decay series
static void BM_RegionNorm(benchmark::State& state) {
    DataPair p = make_pair("gaussian", 3, 2.0);
    double t = static_cast<double>(state.range(0));
    auto f = [&](double r) {
        KernelPair k = kernel_pair(t, r);
        double a = 0.5 / (1.0 + r * r);
        return p.u0.uhat(r) * (k.e0 + a * k.e1) + p.u1.uhat(r) * k.e1;
    };
    double xi = 1.0 + 1e-9;
    for (auto _ : state) {
        auto q = l2_region_norm(f, make_region(Zone::Mid), 3, t, 1e-10);
        benchmark::DoNotOptimize(q.value);
        benchmark::DoNotOptimize(xi);
    }
}
BENCHMARK(BM_RegionNorm)->Arg(10)->Arg(100);

static void BM_MidRegionRate(benchmark::State& state) {
    DataPair p = make_pair("gaussian", 3, 2.0);
    for (auto _ : state) {
        MidRate m = mid_region_rate(p);
        benchmark::DoNotOptimize(m.eta);
    }
}
BENCHMARK(BM_MidRegionRate);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "replab/certificate.hpp"
#include "replab/orbit.hpp"
#include "replab/periodic.hpp"
#include "replab/symbolic.hpp"

using namespace replab;

static void BM_eval_f(benchmark::State& state) {
    const MapParams p(30.0, 1.0 / 3.0);
    double x = 0.5;
    for (auto _ : state) {
        x = eval_f(p, x);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_eval_f);

static void BM_eval_g(benchmark::State& state) {
    const MapParams p(30.0, 1.0 / 3.0);
    double y = 0.1;
    for (auto _ : state) {
        y = eval_g(p, y);
        if (y > 1e6 || y < -1e6) y = 0.1;
        benchmark::DoNotOptimize(y);
    }
}
BENCHMARK(BM_eval_g);

static void BM_iterate(benchmark::State& state) {
    const Map1D f = make_replicator_map(MapParams(30.0, 0.25));
    for (auto _ : state) {
        const Orbit o = iterate(f, 0.5, state.range(0));
        benchmark::DoNotOptimize(o.points.back());
    }
}
BENCHMARK(BM_iterate)->Arg(1000)->Arg(100000);

static void BM_find_periodic_f(benchmark::State& state) {
    const MapParams p(30.0, 1.0 / 3.0);
    for (auto _ : state) {
        const auto res = find_periodic_f(p, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(res.solution_count);
    }
}
BENCHMARK(BM_find_periodic_f)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_enumerate_periodic(benchmark::State& state) {
    for (auto _ : state) {
        const auto en = enumerate_periodic(static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(en.words.size());
    }
}
BENCHMARK(BM_enumerate_periodic)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);

static void BM_counts(benchmark::State& state) {
    for (auto _ : state) {
        const auto t = counts(state.range(0));
        benchmark::DoNotOptimize(t.B);
    }
}
BENCHMARK(BM_counts)->Arg(100)->Arg(10000);

static void BM_certify(benchmark::State& state) {
    const MapParams p(30.0, 1.0 / 3.0);
    for (auto _ : state) {
        const auto cert = certify(p, static_cast<int>(state.range(0)), 200);
        benchmark::DoNotOptimize(cert.pass);
    }
}
BENCHMARK(BM_certify)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

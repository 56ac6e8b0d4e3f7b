#include <benchmark/benchmark.h>

#include "pangular/bounds.hpp"
#include "pangular/certify.hpp"
#include "pangular/extremum.hpp"
#include "pangular/norm.hpp"
#include "pangular/rng.hpp"
#include "pangular/sweep.hpp"

using namespace pangular;

namespace {

void BM_NormEval(benchmark::State& state, const NormSpec& spec) {
    Rng rng(1);
    const Vec v = sample_nonzero_vec(rng, spec.dim());
    for (auto _ : state) {
        benchmark::DoNotOptimize(norm_eval(spec, v));
    }
}

void BM_PAngularDistance(benchmark::State& state) {
    const NormSpec spec = NormSpec::lq(3.0, 5);
    Rng rng(2);
    const auto [x, y] = sample_pair(rng, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(p_angular_distance(spec, x, y, PExponent(0.5)));
    }
}

void BM_BoundReport(benchmark::State& state) {
    const NormSpec spec = NormSpec::linf(3);
    Rng rng(3);
    const auto [x, y] = sample_pair(rng, 3);
    const BoundKind kind = BoundKind::characterizing(QExponent(0.5));
    for (auto _ : state) {
        benchmark::DoNotOptimize(bound_report(spec, x, y, PExponent(0.3), kind));
    }
}

// One full (pair, p) sweep cell body: geometry reuse plus all twelve kinds.
void BM_SweepCell(benchmark::State& state) {
    const NormSpec spec = NormSpec::l2(5);
    for (auto _ : state) {
        auto rows = run_bounds_sweep(spec, {0.0, 0.5, 1.0}, {0.5, 1.0}, 200, 7);
        benchmark::DoNotOptimize(rows);
    }
}

void BM_SearchRestart(benchmark::State& state) {
    const NormSpec spec = NormSpec::linf(2);
    SearchConfig cfg;
    cfg.restarts = 1;
    cfg.steps_per_restart = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_violation(spec, cfg));
    }
}

void BM_FindExtremum(benchmark::State& state) {
    const NormalizedPair pair(2.0, 4.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_extremum(pair, 1e-10));
    }
}

void BM_LorchPair(benchmark::State& state) {
    const NormSpec spec = NormSpec::linf(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lorch_test(spec, 10, 1));
    }
}

}  // namespace

BENCHMARK_CAPTURE(BM_NormEval, l2_dim5, NormSpec::l2(5));
BENCHMARK_CAPTURE(BM_NormEval, linf_dim5, NormSpec::linf(5));
BENCHMARK_CAPTURE(BM_NormEval, lq3_dim5, NormSpec::lq(3.0, 5));
BENCHMARK_CAPTURE(BM_NormEval, wl2_dim5, NormSpec::weighted_l2({1, 4, 1, 4, 1}));
BENCHMARK(BM_PAngularDistance);
BENCHMARK(BM_BoundReport);
BENCHMARK(BM_SweepCell);
BENCHMARK(BM_SearchRestart)->Arg(500)->Arg(2000);
BENCHMARK(BM_FindExtremum);
BENCHMARK(BM_LorchPair);

BENCHMARK_MAIN();

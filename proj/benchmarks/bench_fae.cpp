#include <benchmark/benchmark.h>

#include "fae/estimator.hpp"
#include "fae/oracle.hpp"
#include "fae/simulator.hpp"

static void BM_MeasureCos(benchmark::State& state) {
    const auto spec = fae::ProblemSpec::from_amplitude(0.3, 7);
    fae::BernoulliOracle oracle(spec);
    const auto m = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(oracle.measure_cos(m, 10300, 0.01));
    }
}
BENCHMARK(BM_MeasureCos)->RangeMultiplier(16)->Range(1, 1 << 12);

static void BM_RunFae(benchmark::State& state) {
    const auto cfg = fae::EstimatorConfig::make(0.01, static_cast<int>(state.range(0)));
    const auto spec = fae::ProblemSpec::from_amplitude(0.3, 11);
    std::uint64_t key = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fae::run_fae(cfg, spec, key++));
    }
}
BENCHMARK(BM_RunFae)->DenseRange(3, 14, 1);

static void BM_P11Sequence(benchmark::State& state) {
    const auto chi = fae::sim::build_chi(0.7);
    const auto q = fae::sim::build_grover(chi);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fae::sim::p11_sequence(chi, q, static_cast<std::uint64_t>(state.range(0))));
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_P11Sequence)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

BENCHMARK_MAIN();

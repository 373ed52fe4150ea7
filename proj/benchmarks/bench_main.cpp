#include <benchmark/benchmark.h>

#include "whittle/belief.hpp"
#include "whittle/crossing.hpp"
#include "whittle/index.hpp"
#include "whittle/policies.hpp"
#include "whittle/presets.hpp"
#include "whittle/sim.hpp"

namespace {

void BM_FirstCrossing(benchmark::State& state) {
    const whittle::TransitionMatrix P{0.1, 0.3};
    double thr = 0.0;
    for (auto _ : state) {
        thr += 1e-7;
        benchmark::DoNotOptimize(whittle::first_crossing_time(0.05, thr, P));
    }
}
BENCHMARK(BM_FirstCrossing);

void BM_WhittleIndex(benchmark::State& state) {
    whittle::IndexQuery query;
    query.P = whittle::TransitionMatrix{0.9, 0.2};
    query.epsilon = 0.1;
    query.beta = 0.9;
    query.iterations = static_cast<int>(state.range(0));
    double omega = 0.0;
    for (auto _ : state) {
        omega = omega < 0.99 ? omega + 1e-4 : 1e-4;
        query.omega = omega;
        benchmark::DoNotOptimize(whittle::whittle_index(query));
    }
}
BENCHMARK(BM_WhittleIndex)->Arg(0)->Arg(4)->Arg(8);

void BM_ClosedFormIndex(benchmark::State& state) {
    const whittle::TransitionMatrix P{0.9, 0.2};
    const whittle::ObservationModel obs{0.1};
    double omega = 0.0;
    for (auto _ : state) {
        omega = omega < 0.99 ? omega + 1e-4 : 1e-4;
        benchmark::DoNotOptimize(whittle::closed_form_whittle_index(omega, P, obs, 0.9));
    }
}
BENCHMARK(BM_ClosedFormIndex);

void BM_Episode(benchmark::State& state) {
    whittle::BanditConfig config = whittle::example_config(4);
    config.horizon = 100;
    whittle::PolicySpec policy;
    policy.kind = whittle::PolicyKind::whittle;
    policy.iterations = 4;
    whittle::WhittleIndexCache cache;
    for (auto _ : state) {
        benchmark::DoNotOptimize(whittle::run_episode(config, policy, &cache));
        config.seed += 1;
    }
}
BENCHMARK(BM_Episode);

void BM_JointOptimal(benchmark::State& state) {
    whittle::BanditConfig config = whittle::example_config(4);
    config.arms.resize(3);
    config.beta = 0.48;
    for (auto _ : state)
        benchmark::DoNotOptimize(whittle::joint_optimal_value(config, 4));
}
BENCHMARK(BM_JointOptimal);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <cmath>

#include "wtilde/election.hpp"
#include "wtilde/slocc.hpp"

namespace {

using namespace wtilde;

void BM_RunElection(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double a = 1.0 / std::sqrt(2.0);
    std::uint64_t t = 0;
    for (auto _ : state) {
        Rng rng = Rng::stream(0, t++);
        benchmark::DoNotOptimize(run_election(n, a, a, rng));
    }
}
BENCHMARK(BM_RunElection)->DenseRange(3, 10);

void BM_RunTrials(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double a = 1.0 / std::sqrt(2.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(run_trials(n, a, a, 1000, 0));
    }
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(BM_RunTrials)->Arg(5)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_MeasureState(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double a = 1.0 / std::sqrt(2.0);
    const PureState s = wtilde_state(n, a, a);
    Rng rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(measure_computational(s, rng));
    }
}
BENCHMARK(BM_MeasureState)->Arg(5)->Arg(10)->Arg(16);

void BM_IloObjectiveDescent(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double a = 1.0 / std::sqrt(2.0);
    const PureState src = ghz_state(n);
    const PureState dst = wtilde_state(n, a, a);
    IloSearchOptions opts;
    opts.restarts = 1;
    opts.max_evals = 2000;
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(search_symmetric_ilo(src, dst, opts, seed++));
    }
}
BENCHMARK(BM_IloObjectiveDescent)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

}  // namespace

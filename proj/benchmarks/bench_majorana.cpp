#include <benchmark/benchmark.h>

#include "wtilde/majorana.hpp"

namespace {

using namespace wtilde;

void BM_MajoranaSumDirect(benchmark::State& state) {
    const auto points = phi_set(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(majorana_sum(points));
    }
}
BENCHMARK(BM_MajoranaSumDirect)->DenseRange(3, 8);

void BM_MajoranaSumFast(benchmark::State& state) {
    const auto points = phi_set(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(majorana_sum_fast(points));
    }
}
BENCHMARK(BM_MajoranaSumFast)->DenseRange(3, 12);

void BM_MajoranaExtract(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const double a = 1.0 / std::sqrt(2.0);
    const PureState s = wtilde_state(n, a, a);
    for (auto _ : state) {
        benchmark::DoNotOptimize(majorana_extract(s));
    }
}
BENCHMARK(BM_MajoranaExtract)->DenseRange(4, 12)->Unit(benchmark::kMicrosecond);

void BM_VerifyLemma1(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_lemma1(n));
    }
}
BENCHMARK(BM_VerifyLemma1)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

}  // namespace

#include "teichdisk/jenkins_strebel.hpp"
#include "teichdisk/plumbing.hpp"
#include "teichdisk/qc.hpp"

#include <benchmark/benchmark.h>

using namespace teichdisk;

static void BM_NormalizeSheared(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  js::IntervalExchange iet;
  for (std::size_t k = 0; k < n; ++k) {
    iet.lengths.push_back(Scalar::ratio(static_cast<std::int64_t>(k) + 1, 3));
    iet.permutation.push_back(n - 1 - k);
    iet.flips.push_back(false);
  }
  const auto j = js::js_build(iet.total_length(), 1, iet, Scalar::ratio(1, 7));
  for (auto _ : state) benchmark::DoNotOptimize(js::normalize_sheared(j, Scalar::ratio(5, 3)));
}
BENCHMARK(BM_NormalizeSheared)->Arg(2)->Arg(8)->Arg(32);

static void BM_InterpolateEndMap(benchmark::State& state) {
  const auto g = qc::UnivalentEndMap::mobius(0.5);
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qc::interpolate_end_map(g, 0.125, n).K);
}
BENCHMARK(BM_InterpolateEndMap)->Arg(101)->Arg(201)->Unit(benchmark::kMillisecond);

static void BM_TwistFreeDepth(benchmark::State& state) {
  const auto g = qc::UnivalentEndMap::twisted(2.0);
  for (auto _ : state) benchmark::DoNotOptimize(qc::twist_free_depth(g, 0.0).r0);
}
BENCHMARK(BM_TwistFreeDepth);

static void BM_PlumbingCertificate(benchmark::State& state) {
  auto fx = plumbing::swap_fixture();
  fx.charts[0] = plumbing::EndChart::general(qc::UnivalentEndMap::mobius(0.3));
  for (auto _ : state) benchmark::DoNotOptimize(plumbing::theorem2_certificate(fx, 0.05).H);
}
BENCHMARK(BM_PlumbingCertificate)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK_MAIN();

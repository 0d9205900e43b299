#include <benchmark/benchmark.h>

#include "leodoppler/leodoppler.hpp"

namespace {

using namespace leodoppler;

const DopplerMagnitudeDistribution& law() {
  static const auto d = DopplerMagnitudeDistribution::for_satellite(leo_600km(), 100e3, 200e3);
  return d;
}

void BM_DopplerCdf(benchmark::State& state) {
  const auto& d = law();
  double x = 0.0;
  const double step = d.support_max() / 1024.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.cdf(x));
    x = x + step > d.support_max() ? 0.0 : x + step;
  }
}
BENCHMARK(BM_DopplerCdf);

void BM_DopplerQuantile(benchmark::State& state) {
  const auto& d = law();
  double p = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(d.quantile(p));
    p = p + 0.001 > 1.0 ? 0.0 : p + 0.001;
  }
}
BENCHMARK(BM_DopplerQuantile);

void BM_DopplerExact(benchmark::State& state) {
  const auto cfg = leo_600km();
  const auto pass = PassGeometry::from_alpha_max(0.7, cfg);
  double dt = -300.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(doppler_exact(dt, pass, cfg));
    dt = dt > 300.0 ? -300.0 : dt + 0.5;
  }
}
BENCHMARK(BM_DopplerExact);

void BM_RunScenario(benchmark::State& state) {
  ScenarioConfig s;
  s.satellite = leo_600km();
  s.cluster_radius_m = 100e3;
  s.center_offset_m = 200e3;
  s.users_per_cluster = 10;
  s.trials = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 10);
}
BENCHMARK(BM_RunScenario)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

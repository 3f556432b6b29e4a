#include <benchmark/benchmark.h>

#include <cmath>
#include <limits>

#include "extropy/analysis.hpp"

using namespace extropy;

namespace {

const MeasureOptions kQuad{.closed_forms = false};

void BM_IntegrateGaussianTail(benchmark::State& state) {
  const double inf = std::numeric_limits<double>::infinity();
  for (auto _ : state) {
    auto r = integrate([](double x) { return 16.0 * x * x * std::exp(-4.0 * x * x); }, 0.0, inf);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(BM_IntegrateGaussianTail);

void BM_IntervalExtropyClosedForm(benchmark::State& state) {
  const auto d = Distribution::exponential(1.0);
  const auto w = TruncationWindow::make(d, 1.0, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(interval_extropy(d, w).value);
}
BENCHMARK(BM_IntervalExtropyClosedForm);

void BM_IntervalExtropyQuadrature(benchmark::State& state) {
  const Distribution laws[] = {Distribution::exponential(1.0), Distribution::weibull2(2.0, 2.0),
                               Distribution::lognormal(0.0, 1.0), Distribution::piecewise_example()};
  const auto& d = laws[state.range(0)];
  const auto w = TruncationWindow::make(d, 0.5, 1.5);
  for (auto _ : state) benchmark::DoNotOptimize(interval_extropy(d, w, kQuad).value);
  state.SetLabel(d.describe());
}
BENCHMARK(BM_IntervalExtropyQuadrature)->DenseRange(0, 3);

void BM_ResidualExtropyLognormal(benchmark::State& state) {
  const auto d = Distribution::lognormal(0.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(residual_extropy(d, 2.0).value);
}
BENCHMARK(BM_ResidualExtropyLognormal);

void BM_EquilibriumIntervalExtropy(benchmark::State& state) {
  const auto q = equilibrium(Distribution::weibull2(2.0, 2.0));
  const auto w = TruncationWindow::make(q, 0.2, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(interval_extropy(q, w).value);
}
BENCHMARK(BM_EquilibriumIntervalExtropy);

void BM_ScanFigureSeries(benchmark::State& state) {
  const auto d = Distribution::pareto_shifted(1.0, 10.0);
  const auto grid = inset_grid(1.0, 2.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = scan(d, ScanDirection::vary_t1, 2.0, grid, MeasureId::interval_extropy, kQuad);
    benchmark::DoNotOptimize(r.verdict);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ScanFigureSeries)->Arg(100)->Arg(400);

void BM_Decomposition(benchmark::State& state) {
  const auto d = Distribution::lognormal(0.0, 1.0);
  const auto w = TruncationWindow::make(d, 1.0, 4.0);
  for (auto _ : state) benchmark::DoNotOptimize(weighted_decomposition(d, w).residual_gap);
}
BENCHMARK(BM_Decomposition);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cutapprox/analysis.hpp"
#include "cutapprox/exact_cut.hpp"
#include "cutapprox/monte_carlo.hpp"
#include "cutapprox/pareto.hpp"
#include "cutapprox/quadrature.hpp"
#include "cutapprox/rng.hpp"
#include "cutapprox/sampling.hpp"

namespace {

using namespace cutapprox;

const Scenario kScenario{4.7, 0.3, 10.0, 1.0};

void BM_ParetoCdf(benchmark::State& state) {
  const ParetoParams p{4.7, 0.3};
  double t = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pareto_cdf(t, p));
    t += 1e-6;
  }
}
BENCHMARK(BM_ParetoCdf);

void BM_ExactCdfPoint(benchmark::State& state) {
  const ExactCutEvaluator eval(kScenario);
  const double t = pareto_quantile(0.5, clutter_pareto(kScenario));
  for (auto _ : state) benchmark::DoNotOptimize(eval.cdf(t).value);
}
BENCHMARK(BM_ExactCdfPoint);

void BM_ExactCdfTail(benchmark::State& state) {
  const ExactCutEvaluator eval(kScenario);
  const double t = pareto_quantile(0.9999, clutter_pareto(kScenario));
  for (auto _ : state) benchmark::DoNotOptimize(eval.cdf(t).value);
}
BENCHMARK(BM_ExactCdfTail);

void BM_ExactCurve(benchmark::State& state) {
  for (auto _ : state) {
    const CdfCurve curve = exact_curve(kScenario, GridSpec::analysis_default());
    benchmark::DoNotOptimize(curve.values.data());
  }
}
BENCHMARK(BM_ExactCurve)->Unit(benchmark::kMillisecond);

void BM_GammaGaussRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const GaussRule rule = gamma_gauss_rule(4.7, n);
    benchmark::DoNotOptimize(rule.nodes.data());
  }
}
BENCHMARK(BM_GammaGaussRule)->Arg(25)->Arg(100)->Arg(200);

void BM_SampleCut(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::uint64_t seed = 1;
  for (auto _ : state) {
    const SampleBatch batch = sample_cut(kScenario, seed++, n);
    benchmark::DoNotOptimize(batch.values.data());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SampleCut)->Arg(1 << 14)->Arg(1 << 18)->Unit(benchmark::kMillisecond);

void BM_SpeckleDraw(benchmark::State& state) {
  rng::Stream stream(3, 0);
  for (auto _ : state) benchmark::DoNotOptimize(sample_speckle(kScenario, stream));
}
BENCHMARK(BM_SpeckleDraw);

void BM_KsDistance(benchmark::State& state) {
  const SampleBatch batch = sample_cut(kScenario, 5, 100000);
  const EmpiricalCdf ecdf = EmpiricalCdf::from_batch(batch);
  const ParetoParams eff{4.7, 0.3};
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ks_distance(ecdf, [&](double t) { return pareto_cdf(t, eff); }));
  }
}
BENCHMARK(BM_KsDistance)->Unit(benchmark::kMillisecond);

void BM_SweepRow(benchmark::State& state) {
  for (auto _ : state) {
    const ValidityReport report = sweep(kScenario, {100.0});
    benchmark::DoNotOptimize(report.rows.data());
  }
}
BENCHMARK(BM_SweepRow)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

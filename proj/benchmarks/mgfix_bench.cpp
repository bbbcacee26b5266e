#include <cmath>

#include <benchmark/benchmark.h>

#include "mgfix/axioms.hpp"
#include "mgfix/contraction.hpp"
#include "mgfix/corpus.hpp"
#include "mgfix/picard.hpp"

using namespace mgfix;

static void BM_GMetricEval(benchmark::State& state) {
  const GMetric g = exp_usual_space();
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(g(Point(x), Point(1.3), Point(2.7)));
    x += 1e-9;
  }
}
BENCHMARK(BM_GMetricEval);

static void BM_GmAxioms(benchmark::State& state) {
  const GMetric g = exp_usual_space();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_gm_axioms(g, Interval::closed(0, 10), n, 7));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GmAxioms)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_CertifyImplicit(benchmark::State& state) {
  const NamedFixture f = *find_fixture("ex37");
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_region(f.space, *f.map, *f.params, Condition::implicit,
                                            Region::interval(Interval::open(0, 0.5)), n, 1));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CertifyImplicit)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_CertifyBall(benchmark::State& state) {
  const NamedFixture f = *find_fixture("ex33");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        certify_region(f.space, *f.map, *f.params, Condition::root, Region::ball(), 10000, 1));
  }
}
BENCHMARK(BM_CertifyBall)->Unit(benchmark::kMillisecond);

static void BM_SolveHalfShift(benchmark::State& state) {
  const NamedFixture f = *find_fixture("ex37");
  SolveOptions opts;
  opts.epsilon = std::pow(10.0, -static_cast<double>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_fixed_point(f.space, *f.map, numeric_order(), *f.params, opts));
  }
}
BENCHMARK(BM_SolveHalfShift)->Arg(6)->Arg(12);

BENCHMARK_MAIN();

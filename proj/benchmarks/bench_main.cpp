// Copyright (c) 2026 The tailmix Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Microbenchmarks for the hot paths: subset table construction, ecdf
// queries, the mixing-proportion and component-curve estimators, the
// over-identification test, and outcome generation.

#include <benchmark/benchmark.h>

#include <cstddef>
#include <string>
#include <vector>

#include "tailmix/mixture.hpp"
#include "tailmix/monte_carlo.hpp"
#include "tailmix/rng.hpp"
#include "tailmix/sample.hpp"
#include "tailmix/skew_normal.hpp"
#include "tailmix/spec_test.hpp"
#include "tailmix/tail_ratio.hpp"

namespace {

tailmix::Sample two_group_sample(std::size_t n) {
  tailmix::DesignSpec design;
  design.n = n;
  tailmix::RngStream rng = tailmix::RngStream::substream(design.seed, 0);
  return tailmix::generate_dataset(design, rng);
}

tailmix::Sample three_group_sample(std::size_t n) {
  tailmix::RngStream rng = tailmix::RngStream::substream(7, 0);
  return tailmix::generate_mixture_sample(
      {"0", "1", "2"}, {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}, {0.25, 0.5, 0.75},
      tailmix::SkewNormalParams{0.0, 1.0, 5.0},
      tailmix::SkewNormalParams{0.0, 1.0, -5.0}, n, rng);
}

void BM_SubsetTableBuild(benchmark::State &state) {
  const tailmix::Sample s = two_group_sample(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    tailmix::SubsetTable table(s);
    benchmark::DoNotOptimize(table.view({"0"})->size());
    benchmark::DoNotOptimize(table.view({"1"})->size());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SubsetTableBuild)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_EcdfQueries(benchmark::State &state) {
  const tailmix::Sample s = two_group_sample(10000);
  tailmix::SubsetTable table(s);
  auto view = table.view({"0"});
  double y = -4.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(view->ecdf(y));
    y += 0.001;
    if (y > 4.0) y = -4.0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_EcdfQueries);

void BM_LambdaHat(benchmark::State &state) {
  const tailmix::Sample s = two_group_sample(static_cast<std::size_t>(state.range(0)));
  tailmix::SubsetTable table(s);
  for (auto _ : state) {
    const auto est = tailmix::lambda_hat(table, "0");
    benchmark::DoNotOptimize(est.lambda);
  }
}
BENCHMARK(BM_LambdaHat)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_ComponentCurvesDefaultGrid(benchmark::State &state) {
  const tailmix::Sample s = two_group_sample(static_cast<std::size_t>(state.range(0)));
  tailmix::SubsetTable table(s);
  for (auto _ : state) {
    const auto est = tailmix::component_cdfs(table, {"0"}, {"1"});
    benchmark::DoNotOptimize(est.g.data());
  }
}
BENCHMARK(BM_ComponentCurvesDefaultGrid)->Arg(1000)->Arg(10000);

void BM_SpecTest(benchmark::State &state) {
  const tailmix::Sample s = three_group_sample(static_cast<std::size_t>(state.range(0)));
  tailmix::SubsetTable table(s);
  const tailmix::WeightFn w = [](double) { return 1.0; };
  for (auto _ : state) {
    const auto result = tailmix::run_spec_test(table, {"0"}, {"1"}, {"2"}, {},
                                               w, tailmix::ComponentKind::G);
    benchmark::DoNotOptimize(result.statistic);
  }
}
BENCHMARK(BM_SpecTest)->Arg(3000)->Arg(10000);

void BM_SkewNormalDraws(benchmark::State &state) {
  const tailmix::SkewNormalParams p{0.0, 1.0, 5.0};
  tailmix::RngStream rng(99);
  for (auto _ : state) {
    benchmark::DoNotOptimize(tailmix::skew_normal_draw(p, rng));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SkewNormalDraws);

void BM_StudyReplication(benchmark::State &state) {
  tailmix::DesignSpec design;
  design.n = 1000;
  design.reps = 1;
  for (auto _ : state) {
    const auto report = tailmix::run_study(design);
    benchmark::DoNotOptimize(report.included_reps);
    design.seed += 1;  // avoid re-running the identical replication
  }
}
BENCHMARK(BM_StudyReplication);

}  // namespace

BENCHMARK_MAIN();

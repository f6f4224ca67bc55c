// Copyright 2026 The rwspace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "rwspace/expr.hpp"
#include "rwspace/flow.hpp"
#include "rwspace/immersion.hpp"
#include "rwspace/profile.hpp"

namespace {

using namespace rwspace;

void BM_ExprEval(benchmark::State& state) {
  const Expr e = parse_expr("sqrt(t^2 + t + 2) * cosh(t) / (1 + exp(-t))", "t");
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(e.eval(x));
    x += 1e-9;
  }
}
BENCHMARK(BM_ExprEval);

void BM_ExprSecondDerivative(benchmark::State& state) {
  const Expr e = parse_expr("sqrt(t^2 + t + 2) * cosh(t) / (1 + exp(-t))", "t");
  for (auto _ : state) benchmark::DoNotOptimize(e.derivative().derivative().size());
}
BENCHMARK(BM_ExprSecondDerivative);

void BM_WarpToProfile(benchmark::State& state) {
  const WarpingFunction w{SmoothFunction(parse_expr("cosh(s)", "s")), Interval{-3.0, 3.0}, 1};
  for (auto _ : state) benchmark::DoNotOptimize(warp_to_profile(w).h.size());
}
BENCHMARK(BM_WarpToProfile)->Unit(benchmark::kMillisecond);

void BM_CurveLaplacian(benchmark::State& state) {
  const auto im = make_slice_sphere(de_sitter_surface(1), 0.0, 1, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplace_beltrami(im).value.size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CurveLaplacian)->RangeMultiplier(4)->Range(64, 4096)->Complexity(benchmark::oN);

void BM_IcosphereLaplacian(benchmark::State& state) {
  const auto im = make_slice_sphere(de_sitter_surface(2), 0.0, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(laplace_beltrami(im).value.size());
  state.counters["vertices"] = static_cast<double>(im.positions.size());
}
BENCHMARK(BM_IcosphereLaplacian)->DenseRange(2, 5)->Unit(benchmark::kMicrosecond);

void BM_TakahashiResidual(benchmark::State& state) {
  const auto im = make_slice_sphere(de_sitter_surface(2), 0.0, 2, 4);
  for (auto _ : state) benchmark::DoNotOptimize(takahashi_residual(im).sup);
}
BENCHMARK(BM_TakahashiResidual)->Unit(benchmark::kMicrosecond);

// Cost of one explicit flow update including reprojection and diagnostics.
void BM_FlowStep(benchmark::State& state) {
  const auto im = make_perturbed_great_circle(2, static_cast<int>(state.range(0)), 0.1);
  FlowConfig cfg;
  cfg.max_iters = 10;
  for (auto _ : state) benchmark::DoNotOptimize(stationarize(im, cfg).trace.iterations);
  state.SetItemsProcessed(state.iterations() * cfg.max_iters);
}
BENCHMARK(BM_FlowStep)->Arg(128)->Arg(512)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

// Copyright 2026 The Cagelift Authors
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

#include <vector>

#include "benchmark/benchmark.h"
#include "cagelift/assignment_search.h"
#include "cagelift/constructions.h"
#include "cagelift/cycle_analysis.h"
#include "cagelift/graph_analysis.h"
#include "cagelift/lift.h"
#include "cagelift/walks.h"

namespace cagelift {
namespace {

void BM_LiftG12(benchmark::State& state) {
  const VoltageGraph g = BuildG12();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(Lift(g, m));
}
BENCHMARK(BM_LiftG12)->Arg(10)->Arg(40);

void BM_GirthOfLift(benchmark::State& state) {
  const SimpleGraph lift = Lift(BuildG12(), static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Girth(lift));
  state.counters["order"] = lift.order();
}
BENCHMARK(BM_GirthOfLift)->Arg(10)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_EnumerateCyclesH12(benchmark::State& state) {
  const VoltageGraph g = BuildH12();
  const int max_len = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateCycles(g, max_len));
  }
}
BENCHMARK(BM_EnumerateCyclesH12)->Arg(8)->Arg(10);

void BM_EnumerateClosedWalksH12(benchmark::State& state) {
  const VoltageGraph g = BuildH12();
  for (auto _ : state) {
    benchmark::DoNotOptimize(EnumerateClosedWalks(g, 11, true));
  }
}
BENCHMARK(BM_EnumerateClosedWalksH12)->Unit(benchmark::kMillisecond);

void BM_CertifyG12(benchmark::State& state) {
  const VoltageGraph g = BuildG12();
  for (auto _ : state) benchmark::DoNotOptimize(Certify(g, 12, 3, 40));
}
BENCHMARK(BM_CertifyG12)->Unit(benchmark::kMillisecond);

void BM_SearchG6(benchmark::State& state) {
  SearchProblem p;
  p.skeleton = BuildG6(0, 0);
  p.free_arcs = {5, 6};
  p.target_girth = 6;
  p.moduli = {7, 8, 9, 10};
  p.low = -6;
  p.high = 6;
  for (auto _ : state) benchmark::DoNotOptimize(Search(p));
}
BENCHMARK(BM_SearchG6)->Unit(benchmark::kMillisecond);

void BM_SearchG8Random(benchmark::State& state) {
  SearchProblem p;
  p.skeleton = BuildG8(0, 0, 0, 0);
  const int n = p.skeleton.num_arcs();
  p.free_arcs = {n - 4, n - 3, n - 2, n - 1};
  p.target_girth = 8;
  p.moduli = {5, 6, 7};
  p.strategy = SearchStrategy::kRandom;
  p.seed = 1;
  p.budget = 2000;
  for (auto _ : state) benchmark::DoNotOptimize(Search(p));
}
BENCHMARK(BM_SearchG8Random)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cagelift

BENCHMARK_MAIN();

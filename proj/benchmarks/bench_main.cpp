// Copyright 2026 The deflate-kit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>

#include "corpus.hpp"
#include "deflate/deflatability.hpp"
#include "deflate/deform.hpp"
#include "deflate/dual.hpp"
#include "deflate/realize.hpp"
#include "deflate/smallpoly.hpp"
#include "deflate/visibility.hpp"
#include "test_support.hpp"

namespace deflate {
namespace {

void BM_VisibilityGraphConvex(benchmark::State& state) {
  const Polygon p = testing::convex_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(visibility_graph(p));
}
BENCHMARK(BM_VisibilityGraphConvex)->Arg(6)->Arg(10)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_IsDeflatedRealized(benchmark::State& state) {
  const auto corpus = testing::deflated_corpus(5, 1, static_cast<int>(state.range(0)),
                                               static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_deflated(corpus[0].polygon));
}
BENCHMARK(BM_IsDeflatedRealized)->Arg(8)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_EnumerateTriangulations(benchmark::State& state) {
  const Polygon p = testing::convex_polygon(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(p));
}
BENCHMARK(BM_EnumerateTriangulations)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_DeflatedDual(benchmark::State& state) {
  const auto corpus = testing::deflated_corpus(9, 1, static_cast<int>(state.range(0)),
                                               static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(deflated_dual(corpus[0].polygon));
}
BENCHMARK(BM_DeflatedDual)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Realize(benchmark::State& state) {
  std::mt19937_64 rng(state.range(0));
  const DualTree d = testing::random_directed_dual(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(realize(d));
}
BENCHMARK(BM_Realize)->Arg(6)->Arg(10)->Arg(14)->Unit(benchmark::kMillisecond);

void BM_DeformRefined(benchmark::State& state) {
  std::mt19937_64 rng(3);
  const DualTree d = testing::random_directed_dual(rng, static_cast<int>(state.range(0)));
  const Polygon from = realize(d);
  RealizeOptions opts;
  opts.jitter_seed = 41;
  const Polygon to = realize(d, opts);
  for (auto _ : state) benchmark::DoNotOptimize(deform_refined(from, to));
}
BENCHMARK(BM_DeformRefined)->Arg(6)->Arg(9)->Unit(benchmark::kMillisecond);

void BM_CertifyFixture(benchmark::State& state) {
  const Polygon p = parse_polygon(testing::fixture("fig8.json"));
  for (auto _ : state) benchmark::DoNotOptimize(certify(p));
}
BENCHMARK(BM_CertifyFixture)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_OrderTypes(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_order_types(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OrderTypes)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace deflate

BENCHMARK_MAIN();

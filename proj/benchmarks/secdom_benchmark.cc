// Copyright 2026 The secdom Authors
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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "secdom/classes.h"
#include "secdom/families.h"
#include "secdom/solve_exact.h"
#include "secdom/verify.h"

namespace secdom {
namespace {

Graph RandomGraph(int n, double p, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::FromEdges(n, edges);
}

// Vertex i is joined to all earlier vertices when i % 3 == 0 or i is last.
Graph Threshold(int n) {
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) {
    if (i % 3 != 0 && i != n - 1) continue;
    for (int j = 0; j < i; ++j) edges.emplace_back(j, i);
  }
  return Graph::FromEdges(n, edges);
}

void BM_SolvePath(benchmark::State& state) {
  const Graph g = Generate(FamilySpec::Path(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(g, Variant::kInSDom));
  }
}
BENCHMARK(BM_SolvePath)->DenseRange(8, 24, 4);

void BM_SolveRandom(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)), 0.25, 20260401);
  const Variant variant = static_cast<Variant>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(g, variant));
  }
  state.SetLabel(std::string(VariantName(variant)));
}
BENCHMARK(BM_SolveRandom)
    ->ArgsProduct({{12, 16, 20}, {static_cast<int>(Variant::kDom),
                                  static_cast<int>(Variant::kInSDom)}});

void BM_SolveGrid(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const Graph g = Generate(FamilySpec::Grid(side, side));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(g, Variant::kInSDom));
  }
}
BENCHMARK(BM_SolveGrid)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

void BM_ThresholdInSDS(benchmark::State& state) {
  const Graph g = Threshold(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(ThresholdInSDS(g));
  }
  state.SetComplexityN(g.order() + g.num_edges());
}
BENCHMARK(BM_ThresholdInSDS)->RangeMultiplier(2)->Range(16, 1024)->Complexity();

void BM_VerifySecure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = Generate(FamilySpec::Path(n));
  const VertexSet s = PathWitness(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(VerifySet(g, s, Variant::kInSDom));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_VerifySecure)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

void BM_GridWitness(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(GridWitness(side, side));
  }
}
BENCHMARK(BM_GridWitness)->RangeMultiplier(2)->Range(8, 64)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace secdom

BENCHMARK_MAIN();

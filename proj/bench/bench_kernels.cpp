// Copyright 2026 The hyperpath Authors
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

// Serial reference kernels against the parallel ones on the same inputs.

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>
#include <set>

#include "hyperpath/constructions.hpp"
#include "hyperpath/hypergraph.hpp"
#include "hyperpath/oracle.hpp"
#include "hyperpath/pathfree.hpp"

namespace {

using namespace hyperpath;

Hypergraph star_graph(benchmark::State& state) {
  return balanced_star_union(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)) * 4,
                             4)
      .graph;
}

// A sparse random 3-graph; dense enough to contain short paths.
Hypergraph random3(std::size_t n, std::size_t m) {
  std::mt19937_64 rng(n * 31 + m);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<VertexSet> edges;
  std::set<VertexSet> seen;
  while (edges.size() < m) {
    VertexSet e{pick(rng), pick(rng), pick(rng)};
    std::sort(e.begin(), e.end());
    if (e[0] == e[1] || e[1] == e[2] || !seen.insert(e).second) continue;
    edges.push_back(e);
  }
  return Hypergraph::from_edges(3, n, std::move(edges));
}

void BM_Twins(benchmark::State& state) {
  const auto h = star_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(twins(h));
}

void BM_TwinsReference(benchmark::State& state) {
  const auto h = star_graph(state);
  for (auto _ : state) benchmark::DoNotOptimize(reference::twins(h));
}

void BM_P42Free(benchmark::State& state) {
  const auto h = near_regular_thick_subgraph(static_cast<std::size_t>(state.range(0)),
                                             binom(static_cast<std::size_t>(state.range(0)) / 2, 2) / 2)
                     .graph;
  for (auto _ : state) benchmark::DoNotOptimize(is_p42_free(h));
}

void BM_P42FreeReference(benchmark::State& state) {
  const auto h = near_regular_thick_subgraph(static_cast<std::size_t>(state.range(0)),
                                             binom(static_cast<std::size_t>(state.range(0)) / 2, 2) / 2)
                     .graph;
  for (auto _ : state) benchmark::DoNotOptimize(reference::find_linear_pair(h));
}

void BM_LoosePath3(benchmark::State& state) {
  const auto h = max_quasi_bipartite(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(find_loose_path(h, 3));
}

void BM_LoosePath3Reference(benchmark::State& state) {
  const auto h = max_quasi_bipartite(static_cast<std::size_t>(state.range(0))).graph;
  for (auto _ : state) benchmark::DoNotOptimize(reference::find_loose_path(h, 3));
}

void BM_Triangle(benchmark::State& state) {
  const auto h = random3(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(contains_triangle(h));
}

void BM_TriangleReference(benchmark::State& state) {
  const auto h = random3(static_cast<std::size_t>(state.range(0)), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(reference::contains_triangle(h));
}

void BM_MaxEdges(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(max_pfree_edges(4, 2, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_Twins)->Arg(64)->Arg(256);
BENCHMARK(BM_TwinsReference)->Arg(64)->Arg(256);
BENCHMARK(BM_P42Free)->Arg(40)->Arg(80);
BENCHMARK(BM_P42FreeReference)->Arg(40)->Arg(80);
BENCHMARK(BM_LoosePath3)->Arg(16)->Arg(32);
BENCHMARK(BM_LoosePath3Reference)->Arg(16)->Arg(32);
BENCHMARK(BM_Triangle)->Arg(60)->Arg(120);
BENCHMARK(BM_TriangleReference)->Arg(60)->Arg(120);
BENCHMARK(BM_MaxEdges)->Arg(8)->Arg(9)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

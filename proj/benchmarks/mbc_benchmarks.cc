// Copyright 2026 The Authors.
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

#include "benchmark/benchmark.h"
#include "mbc/gbc.h"
#include "mbc/greedy.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "mbc/tree_solver.h"

namespace mbc {
namespace {

Graph RandomGraph(int n) { return GenRandom(n, 8.0 / n, 42); }

void BM_PathCounts(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    PathCounts pc(g);
    benchmark::DoNotOptimize(pc.sigma(0, g.num_nodes() - 1));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_PathCounts)->RangeMultiplier(2)->Range(64, 512)->Complexity();

void BM_OracleGain(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)));
  const PathCounts pc(g);
  GbcOracle oracle(pc);
  oracle.Add(0);
  oracle.Add(1);
  NodeId v = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle.Gain(v));
    v = v + 1 < g.num_nodes() ? v + 1 : 2;
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_OracleGain)->RangeMultiplier(2)->Range(64, 512)->Complexity(benchmark::oNSquared);

void BM_OracleAdd(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)));
  const PathCounts pc(g);
  const GbcOracle empty(pc);
  for (auto _ : state) {
    state.PauseTiming();
    GbcOracle oracle = empty;
    state.ResumeTiming();
    benchmark::DoNotOptimize(oracle.Add(3));
  }
}
BENCHMARK(BM_OracleAdd)->RangeMultiplier(2)->Range(64, 512);

void BM_GreedyUnit(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)));
  const PathCounts pc(g);
  const CostedInstance inst = CostedInstance::WithUnitCosts(g, 10);
  for (auto _ : state) benchmark::DoNotOptimize(GreedyUnit(inst, pc, 10).gbc);
}
BENCHMARK(BM_GreedyUnit)->Arg(100)->Arg(200)->Arg(300)->Unit(benchmark::kMillisecond);

void BM_GreedyModified(benchmark::State& state) {
  const Graph g = RandomGraph(static_cast<int>(state.range(0)));
  const PathCounts pc(g);
  CostedInstance inst;
  inst.graph = g;
  inst.cost = GenRandomCosts(g, 1.0, 3.0, 7);
  inst.budget = 6.0;
  for (auto _ : state) benchmark::DoNotOptimize(GreedyModified(inst, pc).gbc);
}
BENCHMARK(BM_GreedyModified)->Arg(16)->Arg(24)->Unit(benchmark::kMillisecond);

void BM_TreeSolve(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CostedInstance inst = CostedInstance::WithUnitCosts(GenRandomTree(n, 11), n / 4);
  for (auto _ : state) benchmark::DoNotOptimize(TreeSolve(inst).gbc);
}
BENCHMARK(BM_TreeSolve)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace mbc

BENCHMARK_MAIN();

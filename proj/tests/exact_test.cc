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

#include <algorithm>
#include <cmath>

#include "gtest/gtest.h"
#include "mbc/errors.h"
#include "mbc/exact.h"
#include "mbc/gbc.h"
#include "mbc/greedy.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "mbc/random.h"
#include "mbc/tree_solver.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace mbc {
namespace {

using ::mbc::testing::C4;
using ::mbc::testing::Id;
using ::mbc::testing::P3;
using ::mbc::testing::Star;

Solution Exact(const CostedInstance& inst, const ExactOptions& opts = {}) {
  const PathCounts pc(inst.graph);
  return SolveExact(inst, pc, opts);
}

TEST(ExactTest, CycleSingletonsTie) {
  const Solution sol = Exact(CostedInstance::WithUnitCosts(C4(), 1));
  EXPECT_EQ(sol.nodes, std::vector<NodeId>{0});
  EXPECT_DOUBLE_EQ(sol.gbc, 7.0);
  EXPECT_EQ(sol.algorithm, Algorithm::kExact);
}

TEST(ExactTest, StarCentre) {
  const Graph g = Star(3);
  const Solution sol = Exact(CostedInstance::WithUnitCosts(g, 1));
  EXPECT_EQ(sol.nodes, std::vector<NodeId>{Id(g, "c")});
  EXPECT_DOUBLE_EQ(sol.gbc, 12.0);
}

TEST(ExactTest, PrefersSmallestFullCover) {
  const Graph g = P3();
  const Solution sol = Exact(CostedInstance::WithUnitCosts(g, 3));
  EXPECT_EQ(sol.nodes, std::vector<NodeId>{Id(g, "b")});
  EXPECT_DOUBLE_EQ(sol.gbc, 6.0);
}

TEST(ExactTest, CapAndWhitelist) {
  const Graph g = GenRandom(30, 0.1, 1);
  const CostedInstance inst = CostedInstance::WithUnitCosts(g, 2);
  EXPECT_THROW(Exact(inst), CapExceededError);
  ExactOptions opts;
  opts.candidates = {3, 5, 7, 11};
  const Solution sol = Exact(inst, opts);
  for (NodeId v : sol.nodes) {
    EXPECT_TRUE(std::find(opts.candidates.begin(), opts.candidates.end(), v) !=
                opts.candidates.end());
  }
  EXPECT_LE(sol.nodes.size(), 2u);
}

TEST(ExactProperty, MatchesPlainEnumeration) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 4);
    CostedInstance inst;
    inst.graph = GenRandom(n, 0.4, seed);
    inst.cost = GenRandomCosts(inst.graph, 0.0, 3.0, seed + 5, /*integral=*/true);
    inst.budget = std::floor(inst.TotalCost() / 2);
    const PathCounts pc(inst.graph);
    const double brute = testing::BruteOptimum(n, inst.cost, inst.budget, [&](const auto& c) {
      return testing::BruteGbc(inst.graph, c);
    });
    const Solution sol = SolveExact(inst, pc);
    ASSERT_NEAR(sol.gbc, brute, 1e-9 * n * n) << "seed " << seed;
    ASSERT_LE(sol.cost, inst.budget);
  }
}

TEST(ExactProperty, DominatesEverySolver) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    CostedInstance inst;
    inst.graph = GenRandomTree(9, seed);
    inst.cost = GenRandomCosts(inst.graph, 1.0, 4.0, seed, true);
    inst.budget = 6.0;
    const PathCounts pc(inst.graph);
    const double opt = SolveExact(inst, pc).gbc;
    EXPECT_GE(opt, GreedyRatio(inst, pc).gbc);
    EXPECT_GE(opt, GreedyModified(inst, pc).gbc);
    EXPECT_GE(opt, TreeSolve(inst).gbc);
  }
}

}  // namespace
}  // namespace mbc

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
#include <map>
#include <set>

#include "gtest/gtest.h"
#include "mbc/errors.h"
#include "mbc/exact.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "mbc/random.h"
#include "mbc/tree_solver.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace mbc {
namespace {

using ::mbc::testing::Id;
using ::mbc::testing::P3;
using ::mbc::testing::P4;
using ::mbc::testing::Star;

CostedInstance RandomTreeInstance(uint64_t seed, int n) {
  Rng rng(seed);
  CostedInstance inst;
  inst.graph = GenRandomTree(n, seed);
  inst.cost = GenRandomCosts(inst.graph, 0, 5, seed + 7, /*integral=*/true);
  inst.budget = static_cast<double>(rng.UniformInt(0, static_cast<int64_t>(inst.TotalCost())));
  return inst;
}

TEST(BinarizeTest, StarBecomesChainOfTwo) {
  const Graph g = Star(3);
  const std::vector<double> cost{7.0, 1.0, 1.0, 1.0};
  const RootedTree bin = Binarize(RootedTree::FromGraph(g, cost, Id(g, "c")));
  ASSERT_EQ(bin.size(), 5);
  const int u1 = bin.root;
  EXPECT_FALSE(bin.is_real[u1]);
  EXPECT_EQ(bin.chain_index[u1], 1);
  EXPECT_EQ(bin.cost[u1], 0.0);
  ASSERT_EQ(bin.children[u1].size(), 2u);
  const int u2 = bin.children[u1][1];
  EXPECT_FALSE(bin.is_real[u2]);
  EXPECT_EQ(bin.chain_index[u2], 2);
  EXPECT_EQ(bin.chain_group[u2], bin.chain_group[u1]);
  EXPECT_EQ(bin.cost[u2], 7.0);
  EXPECT_EQ(bin.children[u2].size(), 2u);
  EXPECT_EQ(bin.subtree_size[u1], 3);
  for (int x = 0; x < bin.size(); ++x) EXPECT_LE(bin.children[x].size(), 2u);
}

TEST(BinarizeTest, BinaryTreesAndPathsUnchanged) {
  for (const Graph& g : {P4(), ParseEdgeList("r a\nr b\na c\na d\nb e")}) {
    const std::vector<double> cost(g.num_nodes(), 1.0);
    const RootedTree t = RootedTree::FromGraph(g, cost, 0);
    const RootedTree bin = Binarize(t);
    EXPECT_EQ(bin.size(), t.size());
    for (int x = 0; x < bin.size(); ++x) {
      EXPECT_TRUE(bin.is_real[x]);
      std::vector<int> kids;
      for (int c : bin.children[x]) kids.push_back(bin.origin[c]);
      EXPECT_EQ(kids, t.children[bin.origin[x]]);
    }
    EXPECT_EQ(bin.origin[bin.root], t.root);
  }
}

TEST(BinarizeTest, AtMostDoublesNodes) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = GenRandomTree(20, seed);
    const std::vector<double> cost(20, 1.0);
    const RootedTree bin = Binarize(RootedTree::FromGraph(g, cost, 0));
    EXPECT_LE(bin.size(), 40);
    for (int x = 0; x < bin.size(); ++x) EXPECT_LE(bin.children[x].size(), 2u);
  }
}

TEST(FromGraphTest, RejectsNonTrees) {
  const Graph c4 = testing::C4();
  const std::vector<double> cost(4, 1.0);
  EXPECT_THROW(RootedTree::FromGraph(c4, cost, 0), InvalidInstanceError);
  EXPECT_THROW(TreeSolve(CostedInstance::WithUnitCosts(c4, 1)), InvalidInstanceError);
}

TEST(TreeSolveTest, PathBudgetOne) {
  const Solution sol = TreeSolve(CostedInstance::WithUnitCosts(P4(), 1));
  EXPECT_DOUBLE_EQ(sol.gbc, 10.0);
  ASSERT_EQ(sol.nodes.size(), 1u);
  EXPECT_TRUE(sol.nodes[0] == 1 || sol.nodes[0] == 2);
}

TEST(TreeSolveTest, StarBudgetOne) {
  const Graph g = Star(3);
  const Solution sol = TreeSolve(CostedInstance::WithUnitCosts(g, 1));
  EXPECT_EQ(sol.nodes, std::vector<NodeId>{Id(g, "c")});
  EXPECT_DOUBLE_EQ(sol.gbc, 12.0);
}

TEST(TreeSolveTest, FullBudgetAndZeroBudget) {
  const CostedInstance full = CostedInstance::WithUnitCosts(GenRandomTree(9, 4), 9);
  EXPECT_DOUBLE_EQ(TreeSolve(full).gbc, 72.0);
  const Solution none = TreeSolve(CostedInstance::WithUnitCosts(GenRandomTree(9, 4), 0));
  EXPECT_TRUE(none.nodes.empty());
  EXPECT_EQ(none.gbc, 0.0);
}

// A unary node must count the pairs it covers between itself and its
// only subtree: rooted at an end, the middle of a path covers all 3 pairs.
TEST(TreeSolveTest, UnaryNodeCountsPairsThroughItself) {
  const Graph g = P3();
  for (NodeId root = 0; root < 3; ++root) {
    const Solution sol = TreeSolve(CostedInstance::WithUnitCosts(g, 1), root);
    EXPECT_EQ(sol.nodes, std::vector<NodeId>{Id(g, "b")});
    EXPECT_DOUBLE_EQ(sol.gbc, 6.0);
  }
}

TEST(TreeSolveTest, HighDegreeNodeWithCost) {
  // Centre cost 2, leaves cost 1: with budget 2 the centre (all 15 pairs)
  // beats two leaves (5 + 4 = 9 pairs).
  CostedInstance inst = CostedInstance::WithUnitCosts(Star(5), 2);
  inst.cost[Id(inst.graph, "c")] = 2.0;
  const Solution sol = TreeSolve(inst);
  EXPECT_EQ(sol.nodes, std::vector<NodeId>{Id(inst.graph, "c")});
  EXPECT_DOUBLE_EQ(sol.gbc, 30.0);
  inst.budget = 1.0;
  EXPECT_DOUBLE_EQ(TreeSolve(inst).gbc, 10.0);
}

TEST(TreeDpTest, LeafBaseCase) {
  const TreeDp dp(CostedInstance::WithUnitCosts(P3(), 1), 0);
  const RootedTree& t = dp.tree();
  for (int x = 0; x < t.size(); ++x) {
    if (!t.children[x].empty()) continue;
    EXPECT_EQ(dp.ExactEntry(x, 0, 0), 1.0);
    EXPECT_EQ(dp.ExactEntry(x, 0, 1), 0.0);
    EXPECT_EQ(dp.AtLeast(x, 0, 0), 0.0);
    EXPECT_EQ(dp.AtLeast(x, 0, 1), 0.0);
  }
}

TEST(TreeProperty, MatchesExhaustiveSearch) {
  int high_degree = 0;
  for (uint64_t seed = 0; seed < 220; ++seed) {
    const int n = 2 + static_cast<int>(seed % 11);
    const CostedInstance inst = RandomTreeInstance(seed, n);
    int max_degree = 0;
    for (NodeId v = 0; v < n; ++v) max_degree = std::max(max_degree, inst.graph.degree(v));
    high_degree += max_degree >= 4 ? 1 : 0;
    const PathCounts pc(inst.graph);
    const Solution exact = SolveExact(inst, pc);
    const Solution tree = TreeSolve(inst);
    ASSERT_EQ(tree.gbc, exact.gbc) << "seed " << seed;
    ASSERT_LE(tree.cost, inst.budget);
    ASSERT_EQ(tree.gbc, 2.0 * testing::TreeCoveredPairs(inst.graph, tree.nodes));
    // Independent of the root.
    ASSERT_EQ(TreeSolve(inst, n - 1).gbc, exact.gbc);
  }
  EXPECT_GT(high_degree, 20);
}

TEST(TreeProperty, TablesAreMonotoneInAtLeastView) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const TreeDp dp(RandomTreeInstance(seed, 10));
    for (int x = 0; x < dp.tree().size(); ++x) {
      for (int p = 0; p <= dp.max_pairs(x); ++p) {
        for (int m = 0; m <= dp.node_count(x); ++m) {
          const double here = dp.AtLeast(x, p, m);
          if (p > 0) {
            ASSERT_LE(dp.AtLeast(x, p - 1, m), here);
          }
          if (m > 0) {
            ASSERT_LE(dp.AtLeast(x, p, m - 1), here);
          }
          ASSERT_LE(here, dp.ExactEntry(x, p, m));
        }
      }
      ASSERT_EQ(dp.AtLeast(x, 0, 0), 0.0);
    }
  }
}

// Every entry on the reconstruction path must describe the chosen set:
// pairs covered inside the node's scope, tops left, and whole chain groups.
TEST(TreeProperty, ReconstructionEntriesAreConsistent) {
  for (uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const CostedInstance inst = RandomTreeInstance(seed + 900, n);
    const TreeDp dp(inst);
    const TreeDp::Reconstruction rec = dp.Reconstruct(inst.budget);
    const RootedTree& t = dp.tree();
    const auto d = testing::FloydDistances(inst.graph);
    std::set<NodeId> chosen(rec.nodes.begin(), rec.nodes.end());
    std::map<int, std::set<bool>> group_flags;

    for (const TreeDp::Entry& e : rec.entries) {
      std::set<NodeId> scope;
      std::vector<int> stack{e.node};
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        scope.insert(t.origin[x]);
        for (int c : t.children[x]) stack.push_back(c);
      }
      const NodeId anchor = t.origin[e.node];
      int tops = 0;
      for (NodeId u : scope) {
        bool blocked = false;
        for (NodeId c : chosen) blocked = blocked || d[u][c] + d[c][anchor] == d[u][anchor];
        tops += blocked ? 0 : 1;
      }
      int pairs = 0;
      for (auto a = scope.begin(); a != scope.end(); ++a) {
        for (auto b = std::next(a); b != scope.end(); ++b) {
          bool hit = false;
          for (NodeId c : chosen) hit = hit || d[*a][c] + d[c][*b] == d[*a][*b];
          pairs += hit ? 1 : 0;
        }
      }
      ASSERT_EQ(e.tops, tops) << "seed " << seed << " node " << e.node;
      ASSERT_EQ(e.pairs, pairs) << "seed " << seed << " node " << e.node;
      ASSERT_EQ(e.chosen, chosen.count(anchor) > 0) << "seed " << seed;
      if (!t.is_real[e.node]) group_flags[t.chain_group[e.node]].insert(e.chosen);
    }
    for (const auto& [group, flags] : group_flags) ASSERT_EQ(flags.size(), 1u);
    ASSERT_EQ(2.0 * rec.pairs, TreeSolve(inst).gbc);
  }
}

}  // namespace
}  // namespace mbc

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
#include <set>

#include "gtest/gtest.h"
#include "json.hpp"
#include "mbc/errors.h"
#include "mbc/gbc.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "testing/fixtures.h"

namespace mbc {
namespace {

using ::mbc::testing::Id;
using ::mbc::testing::P3;

TEST(TightAlphaTest, SmallK) {
  const auto two = TightAlpha(2);
  ASSERT_EQ(two.size(), 5u);
  for (const auto& row : two) EXPECT_EQ(row, (std::vector<int64_t>{2, 1, 1}));
  const auto three = TightAlpha(3);
  ASSERT_EQ(three.size(), 6u);
  for (const auto& row : three) EXPECT_EQ(row, (std::vector<int64_t>{9, 6, 4, 8}));
  EXPECT_THROW(TightAlpha(1), std::invalid_argument);
}

TEST(TightAlphaTest, GadgetFactorsMultiplyOut) {
  for (int k = 2; k <= 6; ++k) {
    const auto alpha = TightAlpha(k);
    for (int j = 0; j <= k; ++j) {
      const auto f = TightGadgetFactors(k, j);
      EXPECT_EQ(static_cast<int>(f.size()), k - 1);
      int64_t product = 1;
      for (int x : f) product *= x;
      EXPECT_EQ(product, alpha[0][j]) << "k=" << k << " j=" << j;
    }
  }
}

class TightGraphTest : public ::testing::TestWithParam<int> {};

TEST_P(TightGraphTest, PathCountsAndLengths) {
  const int k = GetParam();
  const TightInstance ti = GenTight(k, 4, 3);
  const Graph& g = ti.instance.graph;
  const TightInstanceMeta& m = ti.meta;
  const PathCounts pc(g);
  ASSERT_EQ(m.row_nodes.size(), static_cast<size_t>(k + 3));
  ASSERT_EQ(m.col_nodes.size(), static_cast<size_t>(k));
  ASSERT_EQ(m.split_nodes.size(), static_cast<size_t>(k + 3));
  EXPECT_EQ(ti.instance.budget, k + 3);
  EXPECT_TRUE(ti.instance.HasUnitCosts());
  for (int i = 0; i < k + 3; ++i) {
    for (int j = 0; j <= k; ++j) {
      const NodeId a = j < k ? m.col_nodes[j] : m.split_nodes[i];
      const NodeId b = m.row_nodes[i];
      EXPECT_EQ(pc.dist(a, b), 2 * (k - 1));
      EXPECT_EQ(static_cast<int64_t>(EnumerateShortestPaths(g, pc, a, b).size()),
                m.alpha[i][j]);
    }
  }
  const int st = pc.dist(m.source_side[0], m.sink_side[0]);
  for (NodeId s : m.source_side) {
    for (NodeId t : m.sink_side) EXPECT_EQ(pc.dist(s, t), st);
  }
  EXPECT_EQ(st, 2 * (k - 1) + 2);
  EXPECT_EQ(m.candidates.size(), static_cast<size_t>(2 * k + 3));
  EXPECT_EQ(m.opt_rows, m.row_nodes);
}

INSTANTIATE_TEST_SUITE_P(SmallK, TightGraphTest, ::testing::Values(2, 3, 4));

TEST(GenTightTest, ParameterChecks) {
  EXPECT_THROW(GenTight(3, 5, 5), std::invalid_argument);
  EXPECT_THROW(GenTight(3, 5, 0, 10), std::invalid_argument);
  EXPECT_THROW(GenTight(1), std::invalid_argument);
  EXPECT_THROW(GenTight(3, 0, 0, 100), CapExceededError);
  const TightInstance ti = GenTight(3);
  EXPECT_EQ(ti.meta.ls, 120);
  EXPECT_EQ(ti.meta.lt, 60);
}

TEST(GenTightTest, MetadataJson) {
  const TightInstance ti = GenTight(2, 3, 2);
  const auto doc = nlohmann::json::parse(TightMetaToJson(ti));
  EXPECT_EQ(doc["k"], 2);
  EXPECT_EQ(doc["row_nodes"].size(), 5u);
  EXPECT_EQ(doc["alpha"][0][0], 2);
  EXPECT_EQ(doc["source_side"][0], "s1");
}

TEST(GenApxTest, SingleEdge) {
  const Graph g = ParseEdgeList("u v");
  const ApxInstance apx = GenApx(g, 1, 2);
  const Graph& h = apx.graph;
  EXPECT_EQ(h.num_nodes(), 6);
  EXPECT_TRUE(apx.meta.intermediates.empty());
  for (NodeId v : {0, 1}) {
    std::vector<NodeId> clique{v, apx.meta.copies[v][0], apx.meta.copies[v][1]};
    for (NodeId x : clique) {
      for (NodeId y : clique) {
        if (x != y) {
          EXPECT_TRUE(h.HasEdge(x, y));
        }
      }
    }
  }
  EXPECT_TRUE(h.HasEdge(Id(h, "u"), Id(h, "v")));
  EXPECT_EQ(h.num_edges(), 7);
  EXPECT_EQ(apx.meta.essential_pairs.size(), 8u);
}

TEST(GenApxTest, PathGetsOneIntermediate) {
  const Graph g = P3();
  const ApxInstance apx = GenApx(g, 1, 1);
  const Graph& h = apx.graph;
  ASSERT_EQ(apx.meta.intermediates.size(), 1u);
  const NodeId z = apx.meta.intermediates.at({Id(g, "a"), Id(g, "c")});
  EXPECT_EQ(h.label(z), "z_a_c");
  const std::set<NodeId> nb(h.neighbors(z).begin(), h.neighbors(z).end());
  EXPECT_EQ(nb, (std::set<NodeId>{Id(h, "a_1"), Id(h, "c_1")}));
}

TEST(GenApxTest, EssentialPairsScaleWithLSquared) {
  for (const Graph& g : {P3(), testing::C4(), testing::Star(3), ParseEdgeList("a b\nb c\nc a\nc d")}) {
    for (int l = 1; l <= 3; ++l) {
      const ApxInstance apx = GenApx(g, 2, l);
      const PathCounts pc(apx.graph);
      const int n = g.num_nodes();
      for (uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<NodeId> group;
        for (NodeId v = 0; v < n; ++v) {
          if (mask >> v & 1) group.push_back(v);
        }
        const double value = GbcModified(apx.graph, pc, apx.meta.essential_pairs, group);
        ASSERT_EQ(value / 2.0, static_cast<double>(l * l * CoveredEdges(g, group)));
      }
    }
  }
}

TEST(GenApxTest, AutoModeRecordsConstant) {
  const ApxInstance apx = GenApxAuto(P3(), 1, 4.0);
  ASSERT_TRUE(apx.meta.calibrated_c.has_value());
  EXPECT_GT(*apx.meta.calibrated_c, 0.0);
  EXPECT_GE(apx.meta.l, 1);
  const auto doc = nlohmann::json::parse(ApxMetaToJson(apx));
  EXPECT_EQ(doc["l"], apx.meta.l);
  EXPECT_TRUE(doc.contains("calibrated_c"));
  EXPECT_THROW(GenApxAuto(P3(), 1, 0.0), std::invalid_argument);
}

TEST(GenRandomTest, Contracts) {
  EXPECT_EQ(GenRandomTree(5, 1).Edges(), GenRandomTree(5, 1).Edges());
  EXPECT_EQ(GenRandomTree(5, 1).num_edges(), 4);
  const Graph g = GenRandom(8, 0.4, 17);
  EXPECT_EQ(g.num_nodes(), 8);
  EXPECT_EQ(g.Edges(), GenRandom(8, 0.4, 17).Edges());
  const Graph k2 = GenRandom(2, 0.0, 3);
  EXPECT_EQ(k2.Edges(), (std::vector<Edge>{{0, 1}}));
  const Graph sparse = GenRandom(30, 0.0, 5);
  EXPECT_TRUE(sparse.IsTree());
  EXPECT_THROW(GenRandom(1, 0.5, 0), std::invalid_argument);
}

TEST(GenRandomTest, Costs) {
  const Graph g = GenRandom(20, 0.2, 1);
  const auto c = GenRandomCosts(g, 0, 5, 2, /*integral=*/true);
  EXPECT_EQ(c, GenRandomCosts(g, 0, 5, 2, true));
  for (double x : c) {
    EXPECT_GE(x, 0.0);
    EXPECT_LE(x, 5.0);
    EXPECT_EQ(x, static_cast<int>(x));
  }
  for (double x : GenRandomCosts(g, 1.0, 2.0, 3)) {
    EXPECT_GE(x, 1.0);
    EXPECT_LT(x, 2.0);
  }
}

TEST(CatalogTest, KnownCounts) {
  const auto catalog = ConnectedGraphCatalog(7);
  std::vector<int> by_n(8, 0);
  for (const Graph& g : catalog) ++by_n[g.num_nodes()];
  EXPECT_EQ(by_n, (std::vector<int>{0, 1, 1, 2, 6, 21, 112, 853}));
}

}  // namespace
}  // namespace mbc

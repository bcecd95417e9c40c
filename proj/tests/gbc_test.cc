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
#include <numeric>

#include "gtest/gtest.h"
#include "mbc/errors.h"
#include "mbc/gbc.h"
#include "mbc/instance_gen.h"
#include "mbc/path_counts.h"
#include "mbc/random.h"
#include "testing/fixtures.h"
#include "testing/oracles.h"

namespace mbc {
namespace {

using ::mbc::testing::C4;
using ::mbc::testing::Id;
using ::mbc::testing::K4;
using ::mbc::testing::P3;

double Tol(int n) { return 1e-9 * n * n; }

double Direct(const Graph& g, std::vector<NodeId> group) {
  const PathCounts pc(g);
  return GbcDirect(g, pc, group);
}

std::vector<NodeId> RandomSubset(Rng& rng, int n, double p) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < n; ++v) {
    if (rng.Bernoulli(p)) out.push_back(v);
  }
  return out;
}

TEST(GbcDirectTest, Examples) {
  const Graph p3 = P3();
  EXPECT_DOUBLE_EQ(Direct(p3, {Id(p3, "b")}), 6.0);
  EXPECT_DOUBLE_EQ(Direct(C4(), {1}), 7.0);
  EXPECT_DOUBLE_EQ(Direct(C4(), {}), 0.0);
  EXPECT_DOUBLE_EQ(Direct(C4(), {0, 1, 2, 3}), 12.0);
  EXPECT_DOUBLE_EQ(Direct(K4(), {0, 1, 2, 3}), 12.0);
  EXPECT_DOUBLE_EQ(Direct(C4(), {1, 3}), 12.0);
}

TEST(GbcDirectTest, MatchesPathEnumeration) {
  Rng rng(7);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 3 + static_cast<int>(seed % 7);
    const Graph g = GenRandom(n, 0.4, seed);
    const PathCounts pc(g);
    for (int trial = 0; trial < 5; ++trial) {
      const auto group = RandomSubset(rng, n, 0.3);
      ASSERT_NEAR(GbcDirect(g, pc, group), testing::BruteGbc(g, group), Tol(n));
    }
  }
}

TEST(GbcModifiedTest, RestrictsToGivenPairs) {
  const Graph c4 = C4();
  const PathCounts pc(c4);
  const std::vector<NodePair> diagonal{{0, 2}, {2, 0}};
  const std::vector<NodeId> group{1};
  EXPECT_DOUBLE_EQ(GbcModified(c4, pc, diagonal, group), 1.0);
  const std::vector<NodePair> dup{{0, 2}, {0, 2}, {0, 1}};
  EXPECT_DOUBLE_EQ(GbcModified(c4, pc, dup, group), 1.5);
}

TEST(OracleTest, NewOracleCopiesSigma) {
  for (const Graph& g : {C4(), P3(), K4()}) {
    const PathCounts pc(g);
    const GbcOracle o(pc);
    EXPECT_EQ(o.value(), 0.0);
    for (NodeId x = 0; x < g.num_nodes(); ++x) {
      for (NodeId y = 0; y < g.num_nodes(); ++y) EXPECT_EQ(o.sigma_tilde(x, y), pc.sigma(x, y));
    }
  }
  const PathCounts pc(C4());
  EXPECT_EQ(GbcOracle(pc).sigma_tilde(0, 2), 2.0);
}

TEST(OracleTest, GainExamples) {
  const PathCounts pc(C4());
  GbcOracle o(pc);
  EXPECT_DOUBLE_EQ(o.Gain(1), 7.0);
  EXPECT_DOUBLE_EQ(o.Add(1), 7.0);
  EXPECT_DOUBLE_EQ(o.value(), 7.0);
  EXPECT_DOUBLE_EQ(o.Gain(3), 5.0);
  EXPECT_EQ(o.Gain(1), 0.0);
  o.Add(3);
  EXPECT_DOUBLE_EQ(o.value(), 12.0);
}

TEST(OracleTest, AddCentreOfPathClearsEverything) {
  const Graph p3 = P3();
  const PathCounts pc(p3);
  GbcOracle o(pc);
  o.Add(Id(p3, "b"));
  for (NodeId x = 0; x < 3; ++x) {
    for (NodeId y = 0; y < 3; ++y) {
      if (x != y) {
        EXPECT_EQ(o.sigma_tilde(x, y), 0.0);
      }
    }
  }
  EXPECT_DOUBLE_EQ(o.value(), 6.0);
}

TEST(OracleTest, AddingMemberIsContractViolation) {
  const PathCounts pc(C4());
  GbcOracle o(pc);
  o.Add(2);
  const double before = o.value();
  EXPECT_THROW(o.Add(2), ContractViolation);
  EXPECT_EQ(o.value(), before);
  EXPECT_EQ(o.members().size(), 1u);
}

TEST(OracleTest, AddAllReachesFullCoverage) {
  const Graph g = GenRandom(12, 0.3, 5);
  const PathCounts pc(g);
  GbcOracle o(pc);
  for (NodeId v : {5, 0, 11, 3, 7, 1, 2, 4, 6, 8, 9, 10}) o.Add(v);
  EXPECT_NEAR(o.value(), 12.0 * 11.0, Tol(12));
}

TEST(BrandesTest, Examples) {
  for (double bc : BrandesBetweenness(C4())) EXPECT_DOUBLE_EQ(bc, 1.0);
  const Graph p3 = P3();
  const auto bp = BrandesBetweenness(p3);
  EXPECT_DOUBLE_EQ(bp[Id(p3, "b")], 2.0);
  EXPECT_DOUBLE_EQ(bp[Id(p3, "a")], 0.0);
  EXPECT_DOUBLE_EQ(bp[Id(p3, "c")], 0.0);
  for (double bc : BrandesBetweenness(K4())) EXPECT_DOUBLE_EQ(bc, 0.0);
}

TEST(GbcProperty, SingleNodeIdentity) {
  for (uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 25);
    const Graph g = GenRandom(n, 0.2, seed);
    const PathCounts pc(g);
    const auto bc = BrandesBetweenness(g);
    for (NodeId v = 0; v < n; ++v) {
      const NodeId group[] = {v};
      ASSERT_NEAR(GbcDirect(g, pc, group), bc[v] + 2.0 * (n - 1), Tol(n));
    }
  }
}

TEST(GbcProperty, OracleInvariantsAlongRandomAdds) {
  Rng rng(11);
  for (uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 4 + static_cast<int>(seed % 15);
    const Graph g = GenRandom(n, 0.25, seed);
    const PathCounts pc(g);
    GbcOracle o(pc);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.UniformInt(0, i)]);
    std::vector<NodeId> members;
    for (int step = 0; step < std::min(n, 5); ++step) {
      const NodeId v = order[step];
      const double predicted = o.Gain(v);
      const double before = GbcDirect(g, pc, members);
      members.push_back(v);
      const double after = GbcDirect(g, pc, members);
      ASSERT_NEAR(predicted, after - before, Tol(n));
      ASSERT_NEAR(o.Add(v), predicted, Tol(n));
      ASSERT_NEAR(o.value(), after, Tol(n));
      double base = 0.0;
      for (NodeId x = 0; x < n; ++x) {
        for (NodeId y = 0; y < n; ++y) {
          const double st = o.sigma_tilde(x, y);
          ASSERT_GE(st, 0.0);
          ASSERT_LE(st, pc.sigma(x, y));
          ASSERT_EQ(st, o.sigma_tilde(y, x));
          if (o.Contains(x) || o.Contains(y)) {
            ASSERT_EQ(st, 0.0);
          }
          if (x != y) base += (pc.sigma(x, y) - st) / pc.sigma(x, y);
        }
      }
      ASSERT_NEAR(o.value(), base, Tol(n));
    }
  }
}

TEST(GbcProperty, Submodularity) {
  Rng rng(3);
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 10);
    const Graph g = GenRandom(n, 0.3, seed);
    const PathCounts pc(g);
    GbcOracle small(pc);
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng.UniformInt(0, i)]);
    const int a = static_cast<int>(rng.UniformInt(0, n / 3));
    const int b = static_cast<int>(rng.UniformInt(a, n - 1));
    for (int i = 0; i < a; ++i) small.Add(order[i]);
    GbcOracle large = small;
    for (int i = a; i < b; ++i) large.Add(order[i]);
    for (int i = b; i < n; ++i) {
      ASSERT_GE(small.Gain(order[i]), large.Gain(order[i]) - Tol(n));
    }
  }
}

TEST(GbcProperty, OrderIndependence) {
  Rng rng(9);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 6 + static_cast<int>(seed % 12);
    const Graph g = GenRandom(n, 0.3, seed);
    const PathCounts pc(g);
    auto group = RandomSubset(rng, n, 0.5);
    GbcOracle forward(pc);
    for (NodeId v : group) forward.Add(v);
    std::reverse(group.begin(), group.end());
    GbcOracle backward(pc);
    for (NodeId v : group) backward.Add(v);
    ASSERT_NEAR(forward.value(), backward.value(), Tol(n));
    ASSERT_NEAR(forward.value(), GbcDirect(g, pc, group), Tol(n));
  }
}

}  // namespace
}  // namespace mbc

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

#ifndef MBC_INSTANCE_GEN_H_
#define MBC_INSTANCE_GEN_H_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mbc/graph.h"

namespace mbc {

inline constexpr int kDefaultGeneratorNodeCap = 100000;

// Matrix weights of the tight family: row i, column j (0-based here),
// k^(k-j-1) (k-1)^j for j < k and (k-1)^k for the last column. Every row
// sums to k^k.
std::vector<std::vector<int64_t>> TightAlpha(int k);

// Branch counts of the series of diamond gadgets joining column j (0-based,
// j == k for the split column) to a row node. Always k-1 gadgets, product
// alpha(., j).
std::vector<int> TightGadgetFactors(int k, int j);

struct TightInstanceMeta {
  int k = 0;
  int ls = 0;
  int lt = 0;
  std::vector<NodeId> row_nodes;    // b_1..b_{k+3}
  std::vector<NodeId> col_nodes;    // a_1..a_k
  std::vector<NodeId> split_nodes;  // a_{k+1,i}, one per row
  std::vector<NodeId> source_side;  // s_1..s_ls
  std::vector<NodeId> sink_side;    // t_1..t_lt
  std::vector<std::vector<int64_t>> alpha;
  std::vector<NodeId> opt_rows;
  // a_1..a_k and b_1..b_{k+3}: the only nodes worth choosing.
  std::vector<NodeId> candidates;
};

struct TightInstance {
  CostedInstance instance;  // unit costs, budget k + 3 (one per row)
  TightInstanceMeta meta;
};

// ls, lt <= 0 select the defaults 40k and 20k. Requires ls > lt >= 1.
TightInstance GenTight(int k, int ls = 0, int lt = 0, int node_cap = kDefaultGeneratorNodeCap);

struct ApxInstanceMeta {
  int k = 0;
  int l = 0;
  std::vector<std::vector<NodeId>> copies;         // copies[v] = v_1..v_l
  std::map<NodePair, NodeId> intermediates;        // (u, v), u < v, non-adjacent
  std::vector<NodePair> essential_pairs;           // ordered (u_i, v_j), u != v
  std::optional<double> calibrated_c;              // set by GenApxAuto
};

// G' keeps the original nodes at ids 0..n-1, so any C within V(g) can be
// evaluated on G' directly.
struct ApxInstance {
  Graph graph;
  ApxInstanceMeta meta;
};

ApxInstance GenApx(const Graph& g, int k, int l, int node_cap = kDefaultGeneratorNodeCap);

// Chooses l = ceil(c m^2 / eps). The constant c bounds the inessential
// contribution, GBC(C) - GBC'(C) <= c m^2 l; it is measured on small probe
// copies (l = 1, 2, 3, every C within V(g) of size <= min(k, 3)) and doubled.
ApxInstance GenApxAuto(const Graph& g, int k, double eps,
                       int node_cap = kDefaultGeneratorNodeCap);

// Number of edges of g with at least one endpoint in `group`.
int CoveredEdges(const Graph& g, std::span<const NodeId> group);

// Connected G(n, p); components are joined by random extra edges.
Graph GenRandom(int n, double edge_prob, uint64_t seed);
// Uniform labelled tree via a random Pruefer sequence.
Graph GenRandomTree(int n, uint64_t seed);
// Costs uniform in [lo, hi]; integral draws whole numbers.
std::vector<double> GenRandomCosts(const Graph& g, double lo, double hi, uint64_t seed,
                                   bool integral = false);

// Every connected graph on 1..max_n nodes up to isomorphism (max_n <= 7).
std::vector<Graph> ConnectedGraphCatalog(int max_n);

std::string TightMetaToJson(const TightInstance& inst);
std::string ApxMetaToJson(const ApxInstance& inst);

}  // namespace mbc

#endif  // MBC_INSTANCE_GEN_H_

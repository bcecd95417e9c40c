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

#ifndef MBC_TREE_SOLVER_H_
#define MBC_TREE_SOLVER_H_

#include <span>
#include <vector>

#include "mbc/graph.h"
#include "mbc/solution.h"

namespace mbc {

// Rooted tree over local ids 0..size()-1. After binarization some nodes are
// chain nodes: a node v with k >= 3 children becomes u_1..u_{k-1}, where u_i
// has children (v_i, u_{i+1}) and u_{k-1} has (v_{k-1}, v_k). All chain
// nodes of v share chain_group == v; only u_{k-1} carries c(v).
struct RootedTree {
  int root = 0;
  std::vector<int> parent;  // -1 at the root
  std::vector<std::vector<int>> children;
  std::vector<char> is_real;
  std::vector<NodeId> origin;     // original node; the expanded node for chain nodes
  std::vector<int> chain_group;   // -1 for real nodes
  std::vector<int> chain_index;   // i of u_i, 0 for real nodes
  std::vector<double> cost;
  std::vector<int> subtree_size;  // real nodes only

  int size() const { return static_cast<int>(parent.size()); }

  // Throws InvalidInstanceError unless g is a tree.
  static RootedTree FromGraph(const Graph& g, std::span<const double> cost, NodeId root = 0);
};

// Replaces every node with three or more children by a chain of binary
// nodes. Trees that are already binary come back unchanged.
RootedTree Binarize(const RootedTree& tree);

// Bottom-up table over the binarized tree.
//
// For a node x let S(x) be the original nodes it stands for: T_v for a real
// node v or for the head u_1 of a chain, and {v} plus T_{v_i..v_k} for a
// chain node u_i. Internally each entry is the cheapest C within S(x) that
// covers exactly `pairs` unordered pairs of S(x) and leaves exactly `tops`
// top nodes (nodes whose path to x's node avoids C). Exact top counts are
// what make the cross-pair count of a combination exact; the "at least"
// view is derived from it.
class TreeDp {
 public:
  explicit TreeDp(const CostedInstance& inst, NodeId root = 0);

  const RootedTree& tree() const { return tree_; }
  int node_count(int x) const { return tables_[x].nodes; }
  int max_pairs(int x) const { return tables_[x].max_pairs; }

  double ExactEntry(int x, int pairs, int tops) const;
  // Cheapest set covering at least `pairs` pairs with at least `tops` tops.
  double AtLeast(int x, int pairs, int tops) const;

  // Largest pair count coverable within the budget.
  int BestPairs(double budget) const;

  struct Entry {
    int node = 0;  // binarized node id
    int pairs = 0;
    int tops = 0;
    bool chosen = false;
  };
  struct Reconstruction {
    std::vector<NodeId> nodes;  // original ids, ascending
    int pairs = 0;
    std::vector<Entry> entries;  // the table entry used at every binarized node
  };
  Reconstruction Reconstruct(double budget) const;

 private:
  struct Choice {
    int32_t pairs_a = 0;
    int32_t tops_a = 0;
    int32_t pairs_b = 0;
    int32_t tops_b = 0;
    bool chosen = false;
  };
  struct Table {
    int nodes = 0;
    int max_pairs = 0;
    std::vector<double> cost;  // (max_pairs + 1) x (nodes + 1)
    std::vector<Choice> choice;
    std::vector<double> at_least;
    size_t Index(int pairs, int tops) const {
      return static_cast<size_t>(pairs) * static_cast<size_t>(nodes + 1) +
             static_cast<size_t>(tops);
    }
  };

  void Fill(int x);
  void Trace(int x, int pairs, int tops, Reconstruction& out) const;

  RootedTree tree_;
  std::vector<Table> tables_;
};

// Optimal budgeted MBC on a tree. The reported gbc is in ordered-pair units
// (twice the number of covered unordered pairs).
Solution TreeSolve(const CostedInstance& inst, NodeId root = 0);

}  // namespace mbc

#endif  // MBC_TREE_SOLVER_H_

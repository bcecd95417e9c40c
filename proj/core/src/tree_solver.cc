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

#include "mbc/tree_solver.h"

#include <algorithm>
#include <limits>

#include "mbc/errors.h"

namespace mbc {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FiniteEntry {
  int pairs;
  int tops;
  double cost;
};

void ComputeSubtreeSizes(RootedTree& t) {
  t.subtree_size.assign(t.size(), 0);
  std::vector<int> order{t.root};
  for (size_t i = 0; i < order.size(); ++i) {
    for (int c : t.children[order[i]]) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int x = *it;
    t.subtree_size[x] = t.is_real[x] ? 1 : 0;
    for (int c : t.children[x]) t.subtree_size[x] += t.subtree_size[c];
  }
}

}  // namespace

RootedTree RootedTree::FromGraph(const Graph& g, std::span<const double> cost, NodeId root) {
  if (!g.IsTree()) {
    throw InvalidInstanceError("graph is not a tree: " + std::to_string(g.num_nodes()) +
                               " nodes, " + std::to_string(g.num_edges()) + " edges");
  }
  const int n = g.num_nodes();
  if (root < 0 || root >= n) throw InvalidInstanceError("root out of range");
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.children.assign(n, {});
  t.is_real.assign(n, 1);
  t.origin.resize(n);
  t.chain_group.assign(n, -1);
  t.chain_index.assign(n, 0);
  t.cost.assign(cost.begin(), cost.end());
  for (NodeId v = 0; v < n; ++v) t.origin[v] = v;
  std::vector<char> seen(n, 0);
  std::vector<NodeId> order{root};
  seen[root] = 1;
  for (size_t i = 0; i < order.size(); ++i) {
    NodeId v = order[i];
    for (NodeId w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = 1;
      t.parent[w] = v;
      t.children[v].push_back(w);
      order.push_back(w);
    }
  }
  ComputeSubtreeSizes(t);
  return t;
}

RootedTree Binarize(const RootedTree& in) {
  RootedTree out;
  auto add_node = [&out](int parent, bool real, NodeId origin, int group, int index,
                         double cost) {
    const int id = out.size();
    out.parent.push_back(parent);
    out.children.emplace_back();
    out.is_real.push_back(real ? 1 : 0);
    out.origin.push_back(origin);
    out.chain_group.push_back(group);
    out.chain_index.push_back(index);
    out.cost.push_back(cost);
    if (parent >= 0) out.children[parent].push_back(id);
    return id;
  };
  // Builds the image of input node x below `parent` and returns its id.
  auto build = [&](auto&& self, int x, int parent) -> int {
    const auto& kids = in.children[x];
    const int k = static_cast<int>(kids.size());
    if (k <= 2 || !in.is_real[x]) {
      const int id = add_node(parent, in.is_real[x], in.origin[x], in.chain_group[x],
                              in.chain_index[x], in.cost[x]);
      for (int c : kids) self(self, c, id);
      return id;
    }
    const NodeId v = in.origin[x];
    int link = parent;
    int head = -1;
    for (int i = 1; i <= k - 1; ++i) {
      const int u = add_node(link, false, v, v, i, i == k - 1 ? in.cost[x] : 0.0);
      if (head < 0) head = u;
      self(self, kids[i - 1], u);
      if (i == k - 1) self(self, kids[k - 1], u);
      link = u;
    }
    return head;
  };
  out.root = build(build, in.root, -1);
  ComputeSubtreeSizes(out);
  return out;
}

TreeDp::TreeDp(const CostedInstance& inst, NodeId root) {
  inst.Validate();
  tree_ = Binarize(RootedTree::FromGraph(inst.graph, inst.cost, root));
  tables_.resize(tree_.size());
  std::vector<int> order{tree_.root};
  for (size_t i = 0; i < order.size(); ++i) {
    for (int c : tree_.children[order[i]]) order.push_back(c);
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) Fill(*it);
}

void TreeDp::Fill(int x) {
  static const Table kEmpty = [] {
    Table t;
    t.cost = {0.0};
    t.choice = {Choice{}};
    t.at_least = {0.0};
    return t;
  }();
  const auto& kids = tree_.children[x];
  const Table& a = kids.size() > 0 ? tables_[kids[0]] : kEmpty;
  const Table& b = kids.size() > 1 ? tables_[kids[1]] : kEmpty;
  // u_i with i <= k-2: the second child continues the same chain.
  const bool chain_link = !tree_.is_real[x] && kids.size() == 2 &&
                          tree_.chain_group[kids[1]] == tree_.chain_group[x];

  Table& t = tables_[x];
  t.nodes = chain_link ? a.nodes + b.nodes : a.nodes + b.nodes + 1;
  t.max_pairs = t.nodes * (t.nodes - 1) / 2;
  const size_t cells = static_cast<size_t>(t.max_pairs + 1) * static_cast<size_t>(t.nodes + 1);
  t.cost.assign(cells, kInf);
  t.choice.assign(cells, Choice{});

  auto finite = [](const Table& tab) {
    std::vector<FiniteEntry> list;
    for (int p = 0; p <= tab.max_pairs; ++p) {
      for (int m = 0; m <= tab.nodes; ++m) {
        const double c = tab.cost[tab.Index(p, m)];
        if (c < kInf) list.push_back({p, m, c});
      }
    }
    return list;
  };
  // Cheapest entry per pair count, any number of tops.
  auto cheapest_by_pairs = [](const Table& tab) {
    std::vector<FiniteEntry> list;
    for (int p = 0; p <= tab.max_pairs; ++p) {
      FiniteEntry best{p, 0, kInf};
      for (int m = 0; m <= tab.nodes; ++m) {
        const double c = tab.cost[tab.Index(p, m)];
        if (c < best.cost) best = {p, m, c};
      }
      if (best.cost < kInf) list.push_back(best);
    }
    return list;
  };
  auto relax = [&t](int pairs, int tops, double cost, const Choice& choice) {
    const size_t i = t.Index(pairs, tops);
    if (cost < t.cost[i]) {
      t.cost[i] = cost;
      t.choice[i] = choice;
    }
  };

  const std::vector<FiniteEntry> fa = finite(a);
  const std::vector<FiniteEntry> fb = finite(b);
  const std::vector<FiniteEntry> ca = cheapest_by_pairs(a);

  if (chain_link) {
    // S(u_i) = T_{v_i} + S(u_{i+1}); the latter already contains v.
    const int cross = a.nodes * b.nodes;
    for (const auto& ea : fa) {
      for (const auto& eb : fb) {
        if (eb.tops == 0) continue;  // v chosen below means v chosen here
        relax(ea.pairs + eb.pairs + cross - ea.tops * eb.tops, ea.tops + eb.tops,
              ea.cost + eb.cost, {ea.pairs, ea.tops, eb.pairs, eb.tops, false});
      }
    }
    for (const auto& ea : ca) {
      for (const auto& eb : fb) {
        if (eb.tops != 0) continue;
        relax(ea.pairs + eb.pairs + cross, 0, ea.cost + eb.cost,
              {ea.pairs, ea.tops, eb.pairs, 0, true});
      }
    }
  } else {
    // Real node, or the last chain node standing in for v: S(x) is the
    // node itself plus both child sides.
    const int cross = (a.nodes + 1) * (b.nodes + 1) - 1;
    for (const auto& ea : fa) {
      for (const auto& eb : fb) {
        const int uncovered = (ea.tops + 1) * (eb.tops + 1) - 1;
        relax(ea.pairs + eb.pairs + cross - uncovered, ea.tops + eb.tops + 1,
              ea.cost + eb.cost, {ea.pairs, ea.tops, eb.pairs, eb.tops, false});
      }
    }
    const std::vector<FiniteEntry> cb = cheapest_by_pairs(b);
    const double own = tree_.cost[x];
    for (const auto& ea : ca) {
      for (const auto& eb : cb) {
        relax(ea.pairs + eb.pairs + cross, 0, own + ea.cost + eb.cost,
              {ea.pairs, ea.tops, eb.pairs, eb.tops, true});
      }
    }
  }

  t.at_least = t.cost;
  for (int p = t.max_pairs; p >= 0; --p) {
    for (int m = t.nodes; m >= 0; --m) {
      double& cell = t.at_least[t.Index(p, m)];
      if (p < t.max_pairs) cell = std::min(cell, t.at_least[t.Index(p + 1, m)]);
      if (m < t.nodes) cell = std::min(cell, t.at_least[t.Index(p, m + 1)]);
    }
  }
}

double TreeDp::ExactEntry(int x, int pairs, int tops) const {
  const Table& t = tables_[x];
  if (pairs < 0 || tops < 0 || pairs > t.max_pairs || tops > t.nodes) return kInf;
  return t.cost[t.Index(pairs, tops)];
}

double TreeDp::AtLeast(int x, int pairs, int tops) const {
  const Table& t = tables_[x];
  pairs = std::max(pairs, 0);
  tops = std::max(tops, 0);
  if (pairs > t.max_pairs || tops > t.nodes) return kInf;
  return t.at_least[t.Index(pairs, tops)];
}

int TreeDp::BestPairs(double budget) const {
  const Table& t = tables_[tree_.root];
  for (int p = t.max_pairs; p > 0; --p) {
    if (t.at_least[t.Index(p, 0)] <= budget) return p;
  }
  return 0;
}

TreeDp::Reconstruction TreeDp::Reconstruct(double budget) const {
  const Table& t = tables_[tree_.root];
  Reconstruction out;
  out.pairs = BestPairs(budget);
  int tops = -1;
  double cheapest = kInf;
  for (int m = 0; m <= t.nodes; ++m) {
    const double c = t.cost[t.Index(out.pairs, m)];
    if (c <= budget && c < cheapest) {
      cheapest = c;
      tops = m;
    }
  }
  if (tops < 0) throw ConsistencyError("tree DP: no entry realizes the optimum");
  Trace(tree_.root, out.pairs, tops, out);
  std::sort(out.nodes.begin(), out.nodes.end());
  out.nodes.erase(std::unique(out.nodes.begin(), out.nodes.end()), out.nodes.end());
  return out;
}

void TreeDp::Trace(int x, int pairs, int tops, Reconstruction& out) const {
  const Table& t = tables_[x];
  const Choice& choice = t.choice[t.Index(pairs, tops)];
  out.entries.push_back({x, pairs, tops, choice.chosen});
  if (choice.chosen) out.nodes.push_back(tree_.origin[x]);
  const auto& kids = tree_.children[x];
  if (kids.size() > 0) Trace(kids[0], choice.pairs_a, choice.tops_a, out);
  if (kids.size() > 1) Trace(kids[1], choice.pairs_b, choice.tops_b, out);
}

Solution TreeSolve(const CostedInstance& inst, NodeId root) {
  TreeDp dp(inst, root);
  TreeDp::Reconstruction rec = dp.Reconstruct(inst.budget);
  Solution sol;
  sol.nodes = std::move(rec.nodes);
  sol.cost = inst.CostOf(sol.nodes);
  sol.gbc = 2.0 * rec.pairs;
  sol.algorithm = Algorithm::kTree;
  return sol;
}

}  // namespace mbc

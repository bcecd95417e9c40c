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

#include "mbc/instance_gen.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"
#include "mbc/errors.h"
#include "mbc/gbc.h"
#include "mbc/path_counts.h"
#include "mbc/random.h"

namespace mbc {
namespace {

int64_t IntPow(int64_t base, int exp) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Accumulates labelled nodes and edges, then validates through Graph.
class GraphBuilder {
 public:
  NodeId AddNode(std::string label) {
    labels_.push_back(std::move(label));
    return static_cast<NodeId>(labels_.size() - 1);
  }
  void AddEdge(NodeId u, NodeId v) { edges_.emplace_back(u, v); }
  int num_nodes() const { return static_cast<int>(labels_.size()); }
  Graph Build() {
    const int n = num_nodes();
    return Graph::FromEdges(n, edges_, std::move(labels_));
  }

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
};

void ForEachSubsetUpTo(int n, int max_size, const std::function<void(std::span<const NodeId>)>& fn) {
  std::vector<NodeId> current;
  auto rec = [&](auto&& self, NodeId next) -> void {
    fn(current);
    if (static_cast<int>(current.size()) == max_size) return;
    for (NodeId v = next; v < n; ++v) {
      current.push_back(v);
      self(self, v + 1);
      current.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<std::vector<int64_t>> TightAlpha(int k) {
  if (k < 2) throw std::invalid_argument("tight family needs k >= 2");
  std::vector<int64_t> row(k + 1);
  for (int j = 0; j < k; ++j) row[j] = IntPow(k, k - j - 1) * IntPow(k - 1, j);
  row[k] = IntPow(k - 1, k);
  return std::vector<std::vector<int64_t>>(k + 3, row);
}

std::vector<int> TightGadgetFactors(int k, int j) {
  if (k < 2 || j < 0 || j > k) throw std::invalid_argument("bad gadget column");
  std::vector<int> factors;
  if (j < k) {
    factors.assign(k - 1 - j, k);
    factors.insert(factors.end(), j, k - 1);
  } else {
    factors.push_back((k - 1) * (k - 1));
    factors.insert(factors.end(), k - 2, k - 1);
  }
  return factors;
}

TightInstance GenTight(int k, int ls, int lt, int node_cap) {
  if (k < 2) throw std::invalid_argument("tight family needs k >= 2");
  if (ls <= 0) ls = 40 * k;
  if (lt <= 0) lt = 20 * k;
  if (!(ls > lt && lt >= 1)) throw std::invalid_argument("tight family needs ls > lt >= 1");

  const int rows = k + 3;
  int64_t planned = static_cast<int64_t>(ls) + lt + k + 2 * rows;
  for (int j = 0; j <= k; ++j) {
    auto f = TightGadgetFactors(k, j);
    planned += static_cast<int64_t>(rows) *
               (std::accumulate(f.begin(), f.end(), int64_t{0}) + (k - 2));
  }
  if (planned > node_cap) {
    throw CapExceededError("tight instance would have " + std::to_string(planned) +
                               " nodes",
                           static_cast<double>(planned));
  }

  TightInstance out;
  TightInstanceMeta& meta = out.meta;
  meta.k = k;
  meta.ls = ls;
  meta.lt = lt;
  meta.alpha = TightAlpha(k);
  GraphBuilder b;
  for (int i = 1; i <= ls; ++i) meta.source_side.push_back(b.AddNode("s" + std::to_string(i)));
  for (int i = 1; i <= lt; ++i) meta.sink_side.push_back(b.AddNode("t" + std::to_string(i)));
  for (int j = 1; j <= k; ++j) meta.col_nodes.push_back(b.AddNode("a" + std::to_string(j)));
  for (int i = 1; i <= rows; ++i) meta.row_nodes.push_back(b.AddNode("b" + std::to_string(i)));
  for (int i = 1; i <= rows; ++i) {
    meta.split_nodes.push_back(b.AddNode("a" + std::to_string(k + 1) + "_" + std::to_string(i)));
  }

  // Diamond gadgets in series: every branch has length 2, so each a-b
  // connection has length 2(k-1) regardless of the column.
  for (int j = 0; j <= k; ++j) {
    const std::vector<int> factors = TightGadgetFactors(k, j);
    for (int i = 0; i < rows; ++i) {
      const std::string tag = "g" + std::to_string(j + 1) + "_" + std::to_string(i + 1) + "_";
      NodeId left = j < k ? meta.col_nodes[j] : meta.split_nodes[i];
      for (size_t g = 0; g < factors.size(); ++g) {
        const NodeId right = g + 1 == factors.size()
                                 ? meta.row_nodes[i]
                                 : b.AddNode(tag + "j" + std::to_string(g + 1));
        for (int r = 0; r < factors[g]; ++r) {
          const NodeId mid =
              b.AddNode(tag + std::to_string(g + 1) + "_" + std::to_string(r + 1));
          b.AddEdge(left, mid);
          b.AddEdge(mid, right);
        }
        left = right;
      }
    }
  }
  for (size_t x = 0; x < meta.source_side.size(); ++x) {
    for (size_t y = x + 1; y < meta.source_side.size(); ++y) {
      b.AddEdge(meta.source_side[x], meta.source_side[y]);
    }
    for (NodeId a : meta.col_nodes) b.AddEdge(meta.source_side[x], a);
    for (NodeId a : meta.split_nodes) b.AddEdge(meta.source_side[x], a);
  }
  for (size_t x = 0; x < meta.sink_side.size(); ++x) {
    for (size_t y = x + 1; y < meta.sink_side.size(); ++y) {
      b.AddEdge(meta.sink_side[x], meta.sink_side[y]);
    }
    for (NodeId r : meta.row_nodes) b.AddEdge(meta.sink_side[x], r);
  }

  meta.opt_rows = meta.row_nodes;
  meta.candidates = meta.col_nodes;
  meta.candidates.insert(meta.candidates.end(), meta.row_nodes.begin(), meta.row_nodes.end());
  out.instance = CostedInstance::WithUnitCosts(b.Build(), static_cast<double>(rows));
  return out;
}

ApxInstance GenApx(const Graph& g, int k, int l, int node_cap) {
  if (l < 1) throw std::invalid_argument("replication count l must be >= 1");
  const int n = g.num_nodes();
  const int64_t non_adjacent = static_cast<int64_t>(n) * (n - 1) / 2 - g.num_edges();
  const int64_t planned = static_cast<int64_t>(n) * (l + 1) + non_adjacent;
  if (planned > node_cap) {
    throw CapExceededError("reduction graph would have " + std::to_string(planned) + " nodes",
                           static_cast<double>(planned));
  }
  ApxInstance out;
  ApxInstanceMeta& meta = out.meta;
  meta.k = k;
  meta.l = l;
  GraphBuilder b;
  for (NodeId v = 0; v < n; ++v) b.AddNode(g.label(v));
  meta.copies.assign(n, {});
  for (NodeId v = 0; v < n; ++v) {
    for (int i = 1; i <= l; ++i) {
      meta.copies[v].push_back(b.AddNode(g.label(v) + "_" + std::to_string(i)));
    }
  }
  for (auto [u, v] : g.Edges()) b.AddEdge(u, v);
  for (NodeId v = 0; v < n; ++v) {
    std::vector<NodeId> clique{v};
    clique.insert(clique.end(), meta.copies[v].begin(), meta.copies[v].end());
    for (size_t x = 0; x < clique.size(); ++x) {
      for (size_t y = x + 1; y < clique.size(); ++y) b.AddEdge(clique[x], clique[y]);
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (g.HasEdge(u, v)) continue;
      const NodeId z = b.AddNode("z_" + g.label(u) + "_" + g.label(v));
      meta.intermediates[{u, v}] = z;
      for (NodeId cu : meta.copies[u]) b.AddEdge(cu, z);
      for (NodeId cv : meta.copies[v]) b.AddEdge(cv, z);
    }
  }
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = 0; v < n; ++v) {
      if (u == v) continue;
      for (NodeId cu : meta.copies[u]) {
        for (NodeId cv : meta.copies[v]) meta.essential_pairs.emplace_back(cu, cv);
      }
    }
  }
  out.graph = b.Build();
  return out;
}

ApxInstance GenApxAuto(const Graph& g, int k, double eps, int node_cap) {
  if (!(eps > 0.0)) throw std::invalid_argument("eps must be > 0");
  const double m = static_cast<double>(g.num_edges());
  double worst = 0.0;
  for (int probe = 1; probe <= 3; ++probe) {
    ApxInstance gp = GenApx(g, k, probe, node_cap);
    PathCounts pc(gp.graph);
    ForEachSubsetUpTo(g.num_nodes(), std::min(k, 3), [&](std::span<const NodeId> group) {
      if (group.empty()) return;
      const double full = GbcDirect(gp.graph, pc, group);
      const double essential = GbcModified(gp.graph, pc, gp.meta.essential_pairs, group);
      worst = std::max(worst, (full - essential) / (m * m * probe));
    });
  }
  const double c = 2.0 * worst;
  const int l = std::max(1, static_cast<int>(std::ceil(c * m * m / eps)));
  ApxInstance out = GenApx(g, k, l, node_cap);
  out.meta.calibrated_c = c;
  return out;
}

int CoveredEdges(const Graph& g, std::span<const NodeId> group) {
  std::vector<char> in(g.num_nodes(), 0);
  for (NodeId v : group) in[v] = 1;
  int covered = 0;
  for (auto [u, v] : g.Edges()) covered += (in[u] || in[v]) ? 1 : 0;
  return covered;
}

Graph GenRandom(int n, double edge_prob, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random graph needs n >= 2");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(edge_prob)) edges.emplace_back(u, v);
    }
  }
  std::vector<NodeId> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](NodeId x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (auto [u, v] : edges) comp[find(u)] = find(v);
  // Join each component to the nodes seen so far through one random edge.
  std::vector<NodeId> seen;
  std::vector<char> done(n, 0);
  for (NodeId v = 0; v < n; ++v) {
    const NodeId root = find(v);
    if (done[root]) continue;
    done[root] = 1;
    std::vector<NodeId> members;
    for (NodeId w = 0; w < n; ++w) {
      if (find(w) == root) members.push_back(w);
    }
    if (!seen.empty()) {
      const NodeId a = members[rng.UniformInt(0, static_cast<int64_t>(members.size()) - 1)];
      const NodeId b = seen[rng.UniformInt(0, static_cast<int64_t>(seen.size()) - 1)];
      edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    seen.insert(seen.end(), members.begin(), members.end());
  }
  return Graph::FromEdges(n, edges);
}

Graph GenRandomTree(int n, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random tree needs n >= 2");
  Rng rng(seed);
  std::vector<NodeId> code(std::max(0, n - 2));
  for (auto& c : code) c = static_cast<NodeId>(rng.UniformInt(0, n - 1));
  std::vector<int> degree(n, 1);
  for (NodeId c : code) ++degree[c];
  std::vector<Edge> edges;
  std::set<NodeId> leaves;
  for (NodeId v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.insert(v);
  }
  for (NodeId c : code) {
    const NodeId leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    if (--degree[c] == 1) leaves.insert(c);
  }
  const NodeId u = *leaves.begin();
  const NodeId v = *std::next(leaves.begin());
  edges.emplace_back(u, v);
  return Graph::FromEdges(n, edges);
}

std::vector<double> GenRandomCosts(const Graph& g, double lo, double hi, uint64_t seed,
                                   bool integral) {
  if (!(lo >= 0.0) || !(hi >= lo)) throw std::invalid_argument("cost range must be 0 <= lo <= hi");
  Rng rng(seed);
  std::vector<double> cost(g.num_nodes());
  for (auto& c : cost) {
    c = integral ? static_cast<double>(rng.UniformInt(static_cast<int64_t>(std::ceil(lo)),
                                                      static_cast<int64_t>(std::floor(hi))))
                 : lo + (hi - lo) * rng.UniformReal();
  }
  return cost;
}

std::vector<Graph> ConnectedGraphCatalog(int max_n) {
  if (max_n < 1 || max_n > 7) throw std::invalid_argument("catalog supports 1 <= max_n <= 7");
  using Mask = uint32_t;  // bit for each pair u < v
  auto pair_bit = [](int u, int v) {
    if (u > v) std::swap(u, v);
    return v * (v - 1) / 2 + u;
  };
  // Minimum mask over relabelings that list nodes by nondecreasing degree.
  auto canonical = [&](int n, Mask mask) {
    std::vector<int> degree(n, 0);
    for (int v = 1; v < n; ++v) {
      for (int u = 0; u < v; ++u) {
        if (mask >> pair_bit(u, v) & 1) {
          ++degree[u];
          ++degree[v];
        }
      }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Mask best = ~Mask{0};
    do {
      bool sorted = true;
      for (int i = 1; i < n && sorted; ++i) sorted = degree[perm[i - 1]] <= degree[perm[i]];
      if (!sorted) continue;
      Mask relabelled = 0;
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (mask >> pair_bit(perm[u], perm[v]) & 1) relabelled |= Mask{1} << pair_bit(u, v);
        }
      }
      best = std::min(best, relabelled);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  std::vector<Graph> catalog;
  std::set<Mask> level{0};  // the single-node graph
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) {
      // Every connected graph has a vertex whose removal keeps it connected.
      std::set<Mask> next;
      for (Mask base : level) {
        for (Mask nb = 1; nb < (Mask{1} << (n - 1)); ++nb) {
          Mask mask = base;
          for (int u = 0; u < n - 1; ++u) {
            if (nb >> u & 1) mask |= Mask{1} << pair_bit(u, n - 1);
          }
          next.insert(canonical(n, mask));
        }
      }
      level = std::move(next);
    }
    for (Mask mask : level) {
      std::vector<Edge> edges;
      for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
          if (mask >> pair_bit(u, v) & 1) edges.emplace_back(u, v);
        }
      }
      catalog.push_back(Graph::FromEdges(n, edges));
    }
  }
  return catalog;
}

std::string TightMetaToJson(const TightInstance& inst) {
  using json = nlohmann::json;
  const Graph& g = inst.instance.graph;
  const TightInstanceMeta& m = inst.meta;
  auto labels = [&g](const std::vector<NodeId>& ids) {
    json arr = json::array();
    for (NodeId v : ids) arr.push_back(g.label(v));
    return arr;
  };
  json doc = {{"family", "tight"},
              {"k", m.k},
              {"ls", m.ls},
              {"lt", m.lt},
              {"budget", inst.instance.budget},
              {"alpha", m.alpha},
              {"row_nodes", labels(m.row_nodes)},
              {"col_nodes", labels(m.col_nodes)},
              {"split_nodes", labels(m.split_nodes)},
              {"source_side", labels(m.source_side)},
              {"sink_side", labels(m.sink_side)},
              {"opt_rows", labels(m.opt_rows)},
              {"candidates", labels(m.candidates)}};
  return doc.dump() + "\n";
}

std::string ApxMetaToJson(const ApxInstance& inst) {
  using json = nlohmann::json;
  const Graph& g = inst.graph;
  const ApxInstanceMeta& m = inst.meta;
  json copies = json::object();
  for (NodeId v = 0; v < static_cast<NodeId>(m.copies.size()); ++v) {
    json arr = json::array();
    for (NodeId c : m.copies[v]) arr.push_back(g.label(c));
    copies[g.label(v)] = std::move(arr);
  }
  json inter = json::array();
  for (const auto& [uv, z] : m.intermediates) {
    inter.push_back({{"pair", {g.label(uv.first), g.label(uv.second)}}, {"node", g.label(z)}});
  }
  json essential = json::array();
  for (auto [x, y] : m.essential_pairs) essential.push_back({g.label(x), g.label(y)});
  json doc = {{"family", "apx"},
              {"k", m.k},
              {"l", m.l},
              {"copies", std::move(copies)},
              {"intermediates", std::move(inter)},
              {"essential_pairs", std::move(essential)}};
  if (m.calibrated_c) doc["calibrated_c"] = *m.calibrated_c;
  return doc.dump() + "\n";
}

}  // namespace mbc

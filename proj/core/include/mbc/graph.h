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

#ifndef MBC_GRAPH_H_
#define MBC_GRAPH_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mbc {

using NodeId = int32_t;
using Edge = std::pair<NodeId, NodeId>;
using NodePair = std::pair<NodeId, NodeId>;

// Undirected, connected, simple graph with dense node ids 0..n-1 and an
// optional label per node. Adjacency lists are sorted. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Validates the edge list: ids in range, no self-loops, no parallel edges,
  // connected. Throws LoadError on violation. `labels` may be empty, in
  // which case node i is labelled "i".
  static Graph FromEdges(int num_nodes, std::span<const Edge> edges,
                         std::vector<std::string> labels = {});

  int num_nodes() const { return num_nodes_; }
  int64_t num_edges() const { return static_cast<int64_t>(targets_.size()) / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {targets_.data() + offsets_[v],
            targets_.data() + offsets_[v + 1]};
  }
  int degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool HasEdge(NodeId u, NodeId v) const;

  const std::string& label(NodeId v) const { return labels_[v]; }
  std::span<const std::string> labels() const { return labels_; }
  std::optional<NodeId> FindLabel(std::string_view label) const;

  // Each undirected edge once, as (u, v) with u < v, sorted.
  std::vector<Edge> Edges() const;

  bool IsTree() const { return num_edges() == num_nodes_ - 1; }

 private:
  int num_nodes_ = 0;
  std::vector<int32_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> index_;
};

// A budgeted MBC instance: graph, nonnegative node costs and a budget.
struct CostedInstance {
  Graph graph;
  std::vector<double> cost;
  double budget = 0.0;

  static CostedInstance WithUnitCosts(Graph g, double budget);

  // Throws InvalidInstanceError if the costs or budget are out of contract.
  void Validate() const;
  bool HasUnitCosts() const;
  double CostOf(std::span<const NodeId> nodes) const;
  double TotalCost() const;
};

// Edge list: one "u v" pair per line, '#' starts a comment. Labels are
// arbitrary whitespace-free tokens; ids follow first appearance.
Graph ParseEdgeList(std::string_view text);

// "label cost" per line; labels absent from the file get cost 1.0.
std::vector<double> ParseCostFile(std::string_view text, const Graph& g);

struct ParsedInstance {
  CostedInstance instance;
  bool has_budget = false;
};

// {"edges": [[u,v],...], "costs": {label: number}, "budget": number}.
// "costs" and "budget" are optional.
ParsedInstance ParseJsonInstance(std::string_view text);

// Serializes to the JSON instance format above, using node labels.
std::string ToJsonInstance(const CostedInstance& inst);

// Reads either format; JSON is detected by a leading '{'.
ParsedInstance LoadInstanceFile(const std::filesystem::path& path);
std::string ReadFile(const std::filesystem::path& path);

}  // namespace mbc

#endif  // MBC_GRAPH_H_

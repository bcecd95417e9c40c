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

#include "mbc/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mbc/errors.h"

namespace mbc {
namespace {

using json = nlohmann::json;

std::vector<std::string_view> SplitTokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

// Calls fn(line_number, tokens) for every non-blank line with comments removed.
template <typename Fn>
void ForEachLine(std::string_view text, Fn fn) {
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++line_no;
    if (size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = SplitTokens(line);
    if (!tokens.empty()) fn(line_no, tokens);
    pos = end + 1;
  }
}

double ParseNumber(std::string_view token, int line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw LoadError(LoadErrorKind::kMalformed,
                    "line " + std::to_string(line_no) + ": not a number '" +
                        std::string(token) + "'");
  }
  return value;
}

class LabelTable {
 public:
  NodeId Intern(const std::string& label) {
    auto [it, inserted] = ids_.try_emplace(label, static_cast<NodeId>(labels_.size()));
    if (inserted) labels_.push_back(label);
    return it->second;
  }
  std::vector<std::string> Release() { return std::move(labels_); }

 private:
  std::unordered_map<std::string, NodeId> ids_;
  std::vector<std::string> labels_;
};

Graph BuildFromLabelledEdges(const std::vector<std::pair<std::string, std::string>>& raw) {
  LabelTable table;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& [a, b] : raw) {
    if (a == b) throw LoadError(LoadErrorKind::kSelfLoop, "edge " + a + " " + b);
    NodeId u = table.Intern(a);
    NodeId v = table.Intern(b);
    edges.emplace_back(u, v);
  }
  std::vector<std::string> labels = table.Release();
  if (labels.empty()) throw LoadError(LoadErrorKind::kEmpty, "no edges");
  const int n = static_cast<int>(labels.size());
  return Graph::FromEdges(n, edges, std::move(labels));
}

std::string JsonLabel(const json& node) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<int64_t>());
  throw LoadError(LoadErrorKind::kMalformed, "edge endpoint must be a string or integer");
}

}  // namespace

Graph Graph::FromEdges(int num_nodes, std::span<const Edge> edges,
                       std::vector<std::string> labels) {
  if (num_nodes <= 0) throw LoadError(LoadErrorKind::kEmpty, "graph has no nodes");
  if (!labels.empty() && static_cast<int>(labels.size()) != num_nodes) {
    throw LoadError(LoadErrorKind::kMalformed, "label count does not match node count");
  }
  Graph g;
  g.num_nodes_ = num_nodes;
  if (labels.empty()) {
    labels.reserve(num_nodes);
    for (int i = 0; i < num_nodes; ++i) labels.push_back(std::to_string(i));
  }
  g.labels_ = std::move(labels);
  for (NodeId i = 0; i < num_nodes; ++i) {
    if (!g.index_.try_emplace(g.labels_[i], i).second) {
      throw LoadError(LoadErrorKind::kMalformed, "duplicate label " + g.labels_[i]);
    }
  }

  std::vector<int32_t> degree(num_nodes, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_nodes || v >= num_nodes) {
      throw LoadError(LoadErrorKind::kMalformed, "edge endpoint out of range");
    }
    if (u == v) {
      throw LoadError(LoadErrorKind::kSelfLoop, "edge " + g.labels_[u] + " " + g.labels_[v]);
    }
    ++degree[u];
    ++degree[v];
  }
  g.offsets_.assign(num_nodes + 1, 0);
  for (int i = 0; i < num_nodes; ++i) g.offsets_[i + 1] = g.offsets_[i] + degree[i];
  g.targets_.assign(g.offsets_.back(), 0);
  std::vector<int32_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.targets_[fill[u]++] = v;
    g.targets_[fill[v]++] = u;
  }
  for (int i = 0; i < num_nodes; ++i) {
    auto first = g.targets_.begin() + g.offsets_[i];
    auto last = g.targets_.begin() + g.offsets_[i + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last) {
      throw LoadError(LoadErrorKind::kDuplicateEdge,
                      "edge " + g.labels_[i] + " " + g.labels_[*dup]);
    }
  }

  std::vector<char> seen(num_nodes, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != num_nodes) {
    throw LoadError(LoadErrorKind::kDisconnected,
                    std::to_string(num_nodes - reached) + " node(s) unreachable from " +
                        g.labels_[0]);
  }
  return g;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  auto adj = neighbors(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<NodeId> Graph::FindLabel(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes_; ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

CostedInstance CostedInstance::WithUnitCosts(Graph g, double budget) {
  CostedInstance inst;
  inst.cost.assign(g.num_nodes(), 1.0);
  inst.graph = std::move(g);
  inst.budget = budget;
  return inst;
}

void CostedInstance::Validate() const {
  if (static_cast<int>(cost.size()) != graph.num_nodes()) {
    throw InvalidInstanceError("cost vector size does not match node count");
  }
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (!(cost[v] >= 0.0) || !std::isfinite(cost[v])) {
      throw InvalidInstanceError("cost of node " + graph.label(v) + " must be finite and >= 0");
    }
  }
  if (!(budget >= 0.0) || std::isnan(budget)) {
    throw InvalidInstanceError("budget must be >= 0");
  }
}

bool CostedInstance::HasUnitCosts() const {
  return std::all_of(cost.begin(), cost.end(), [](double c) { return c == 1.0; });
}

double CostedInstance::CostOf(std::span<const NodeId> nodes) const {
  double total = 0.0;
  for (NodeId v : nodes) total += cost[v];
  return total;
}

double CostedInstance::TotalCost() const {
  double total = 0.0;
  for (double c : cost) total += c;
  return total;
}

Graph ParseEdgeList(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> raw;
  ForEachLine(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 2) {
      throw LoadError(LoadErrorKind::kMalformed,
                      "line " + std::to_string(line_no) + ": expected 'u v'");
    }
    raw.emplace_back(std::string(tokens[0]), std::string(tokens[1]));
  });
  return BuildFromLabelledEdges(raw);
}

std::vector<double> ParseCostFile(std::string_view text, const Graph& g) {
  std::vector<double> cost(g.num_nodes(), 1.0);
  std::vector<char> assigned(g.num_nodes(), 0);
  ForEachLine(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.size() != 2) {
      throw LoadError(LoadErrorKind::kMalformed,
                      "line " + std::to_string(line_no) + ": expected 'label cost'");
    }
    auto id = g.FindLabel(tokens[0]);
    if (!id) {
      throw LoadError(LoadErrorKind::kUnknownLabel,
                      "line " + std::to_string(line_no) + ": " + std::string(tokens[0]));
    }
    double c = ParseNumber(tokens[1], line_no);
    if (!(c >= 0.0) || !std::isfinite(c)) {
      throw LoadError(LoadErrorKind::kMalformed,
                      "line " + std::to_string(line_no) + ": cost must be >= 0");
    }
    if (assigned[*id]) {
      throw LoadError(LoadErrorKind::kMalformed,
                      "line " + std::to_string(line_no) + ": cost given twice for " +
                          std::string(tokens[0]));
    }
    assigned[*id] = 1;
    cost[*id] = c;
  });
  return cost;
}

ParsedInstance ParseJsonInstance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw LoadError(LoadErrorKind::kMalformed, e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw LoadError(LoadErrorKind::kMalformed, "instance needs an \"edges\" array");
  }
  std::vector<std::pair<std::string, std::string>> raw;
  for (const json& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) {
      throw LoadError(LoadErrorKind::kMalformed, "each edge must be a pair");
    }
    raw.emplace_back(JsonLabel(e[0]), JsonLabel(e[1]));
  }
  ParsedInstance parsed;
  parsed.instance.graph = BuildFromLabelledEdges(raw);
  const Graph& g = parsed.instance.graph;
  parsed.instance.cost.assign(g.num_nodes(), 1.0);
  if (doc.contains("costs")) {
    if (!doc["costs"].is_object()) {
      throw LoadError(LoadErrorKind::kMalformed, "\"costs\" must be an object");
    }
    for (const auto& [label, value] : doc["costs"].items()) {
      auto id = g.FindLabel(label);
      if (!id) throw LoadError(LoadErrorKind::kUnknownLabel, label);
      if (!value.is_number() || value.get<double>() < 0.0) {
        throw LoadError(LoadErrorKind::kMalformed, "cost of " + label + " must be >= 0");
      }
      parsed.instance.cost[*id] = value.get<double>();
    }
  }
  if (doc.contains("budget")) {
    if (!doc["budget"].is_number() || doc["budget"].get<double>() < 0.0) {
      throw LoadError(LoadErrorKind::kMalformed, "\"budget\" must be a number >= 0");
    }
    parsed.instance.budget = doc["budget"].get<double>();
    parsed.has_budget = true;
  }
  return parsed;
}

std::string ToJsonInstance(const CostedInstance& inst) {
  const Graph& g = inst.graph;
  json edges = json::array();
  for (auto [u, v] : g.Edges()) edges.push_back({g.label(u), g.label(v)});
  json costs = json::object();
  for (NodeId v = 0; v < g.num_nodes(); ++v) costs[g.label(v)] = inst.cost[v];
  json doc;
  doc["edges"] = std::move(edges);
  doc["costs"] = std::move(costs);
  doc["budget"] = inst.budget;
  return doc.dump() + "\n";
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(LoadErrorKind::kMalformed, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ParsedInstance LoadInstanceFile(const std::filesystem::path& path) {
  std::string text = ReadFile(path);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return ParseJsonInstance(text);
  ParsedInstance parsed;
  parsed.instance = CostedInstance::WithUnitCosts(ParseEdgeList(text), 0.0);
  return parsed;
}

}  // namespace mbc

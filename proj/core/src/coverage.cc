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

#include "mbc/coverage.h"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"
#include "mbc/errors.h"
#include "selection.h"

namespace mbc {
namespace {

using internal::RatioScore;
using internal::StrictlyBetter;

class CoverState {
 public:
  explicit CoverState(const CoverageInstance& ci)
      : ci_(ci), covered_(ci.elements.size(), 0) {}

  double MarginalWeight(NodeId v) const {
    double total = 0.0;
    for (int e : ci_.sets[v]) {
      if (!covered_[e]) total += ci_.elements[e].weight;
    }
    return total;
  }

  void Take(NodeId v) {
    for (int e : ci_.sets[v]) {
      if (!covered_[e]) {
        covered_[e] = 1;
        weight_ += ci_.elements[e].weight;
      }
    }
  }

  double weight() const { return weight_; }

 private:
  const CoverageInstance& ci_;
  std::vector<char> covered_;
  double weight_ = 0.0;
};

}  // namespace

CoverageInstance ReduceToCoverage(const CostedInstance& inst, const PathCounts& pc,
                                  size_t max_elements) {
  const Graph& g = inst.graph;
  const int n = g.num_nodes();
  double total_paths = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) total_paths += pc.sigma(s, t);
  }
  if (total_paths > static_cast<double>(max_elements)) {
    throw CapExceededError("coverage reduction needs more elements than the cap allows",
                           total_paths);
  }
  CoverageInstance ci;
  ci.sets.resize(n);
  ci.set_cost = inst.cost;
  ci.budget = inst.budget;
  ci.elements.reserve(static_cast<size_t>(total_paths));
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId t = s + 1; t < n; ++t) {
      const double weight = 2.0 / pc.sigma(s, t);
      for (auto& path : EnumerateShortestPaths(g, pc, s, t, static_cast<double>(max_elements))) {
        const int index = static_cast<int>(ci.elements.size());
        for (NodeId v : path) ci.sets[v].push_back(index);
        ci.elements.push_back({s, t, weight, std::move(path)});
      }
    }
  }
  return ci;
}

double CoverageWeight(const CoverageInstance& ci, std::span<const NodeId> chosen) {
  CoverState state(ci);
  for (NodeId v : chosen) state.Take(v);
  return state.weight();
}

CoverageSolution CoverageGreedyUnit(const CoverageInstance& ci, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const int n = static_cast<int>(ci.sets.size());
  CoverState state(ci);
  CoverageSolution sol;
  std::vector<NodeId> remaining(n);
  for (NodeId v = 0; v < n; ++v) remaining[v] = v;
  for (int step = 0; step < std::min(k, n); ++step) {
    size_t best = 0;
    double best_gain = state.MarginalWeight(remaining[0]);
    for (size_t i = 1; i < remaining.size(); ++i) {
      const double gain = state.MarginalWeight(remaining[i]);
      if (StrictlyBetter(gain, best_gain)) {
        best = i;
        best_gain = gain;
      }
    }
    state.Take(remaining[best]);
    sol.order.push_back(remaining[best]);
    sol.cost += ci.set_cost[remaining[best]];
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  sol.weight = state.weight();
  return sol;
}

CoverageSolution CoverageGreedyBudgeted(const CoverageInstance& ci) {
  const int n = static_cast<int>(ci.sets.size());
  CoverState state(ci);
  CoverageSolution sol;
  std::vector<NodeId> remaining(n);
  for (NodeId v = 0; v < n; ++v) remaining[v] = v;
  std::vector<double> gains(n);
  bool stale = true;
  while (!remaining.empty()) {
    if (stale) {
      for (size_t i = 0; i < remaining.size(); ++i) gains[i] = state.MarginalWeight(remaining[i]);
      stale = false;
    }
    size_t best = 0;
    double best_score = RatioScore(gains[0], ci.set_cost[remaining[0]]);
    for (size_t i = 1; i < remaining.size(); ++i) {
      const double score = RatioScore(gains[i], ci.set_cost[remaining[i]]);
      if (StrictlyBetter(score, best_score)) {
        best = i;
        best_score = score;
      }
    }
    const NodeId u = remaining[best];
    if (sol.cost + ci.set_cost[u] <= ci.budget) {
      state.Take(u);
      sol.order.push_back(u);
      sol.cost += ci.set_cost[u];
      stale = true;
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    gains.erase(gains.begin() + static_cast<std::ptrdiff_t>(best));
  }
  sol.weight = state.weight();
  return sol;
}

std::string CoverageToJson(const CoverageInstance& ci, const Graph& g) {
  using json = nlohmann::json;
  json elements = json::array();
  for (const auto& e : ci.elements) {
    elements.push_back({{"pair", {g.label(e.s), g.label(e.t)}}, {"weight", e.weight}});
  }
  json sets = json::object();
  json costs = json::object();
  for (NodeId v = 0; v < static_cast<NodeId>(ci.sets.size()); ++v) {
    sets[g.label(v)] = ci.sets[v];
    costs[g.label(v)] = ci.set_cost[v];
  }
  json doc = {{"elements", std::move(elements)},
              {"sets", std::move(sets)},
              {"costs", std::move(costs)},
              {"budget", ci.budget}};
  return doc.dump() + "\n";
}

}  // namespace mbc

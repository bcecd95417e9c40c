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

#include "mbc/exact.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbc/errors.h"
#include "mbc/gbc.h"
#include "selection.h"

namespace mbc {
namespace {

using internal::kTieTolerance;
using internal::StrictlyBetter;

struct Incumbent {
  double value = 0.0;
  std::vector<NodeId> nodes;  // empty set is always feasible
};

class SubsetSearch {
 public:
  SubsetSearch(const CostedInstance& inst, std::vector<NodeId> pool)
      : inst_(inst),
        pool_(std::move(pool)),
        full_value_(static_cast<double>(inst.graph.num_nodes()) *
                    (inst.graph.num_nodes() - 1)) {}

  void Run(const GbcOracle& root) {
    std::vector<NodeId> current;
    Expand(root, 0, 0.0, current);
  }

  const Incumbent& best() const { return best_; }

 private:
  // Subsets are visited in lexicographic order, so among equal values and
  // sizes the first one seen is the lexicographically smallest.
  void Offer(double value, const std::vector<NodeId>& nodes) {
    if (StrictlyBetter(value, best_.value)) {
      best_ = {value, nodes};
      return;
    }
    const bool tied =
        std::abs(value - best_.value) <= kTieTolerance * std::max(1.0, std::abs(best_.value));
    if (tied && nodes.size() < best_.nodes.size()) best_ = {value, nodes};
  }

  bool Saturated() const {
    return best_.value >= full_value_ - kTieTolerance * std::max(1.0, full_value_);
  }

  void Expand(const GbcOracle& oracle, size_t next, double spent,
              std::vector<NodeId>& current) {
    for (size_t i = next; i < pool_.size(); ++i) {
      const NodeId v = pool_[i];
      if (spent + inst_.cost[v] > inst_.budget) continue;
      // Once some set covers everything, only strictly smaller sets matter.
      if (Saturated() && current.size() + 1 >= best_.nodes.size()) return;
      current.push_back(v);
      const double child_spent = spent + inst_.cost[v];
      bool extendable = false;
      for (size_t j = i + 1; j < pool_.size() && !extendable; ++j) {
        extendable = child_spent + inst_.cost[pool_[j]] <= inst_.budget;
      }
      if (extendable) {
        GbcOracle child = oracle;
        child.Add(v);
        Offer(child.value(), current);
        Expand(child, i + 1, child_spent, current);
      } else {
        Offer(oracle.value() + oracle.Gain(v), current);
      }
      current.pop_back();
    }
  }

  const CostedInstance& inst_;
  std::vector<NodeId> pool_;
  double full_value_;
  Incumbent best_;
};

}  // namespace

Solution SolveExact(const CostedInstance& inst, const PathCounts& pc,
                    const ExactOptions& options) {
  const Graph& g = inst.graph;
  std::vector<NodeId> pool;
  if (options.candidates.empty()) {
    for (NodeId v = 0; v < g.num_nodes(); ++v) pool.push_back(v);
  } else {
    pool = options.candidates;
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    if (pool.front() < 0 || pool.back() >= g.num_nodes()) {
      throw std::invalid_argument("candidate node id out of range");
    }
  }
  if (static_cast<int>(pool.size()) > options.max_candidates) {
    throw CapExceededError("exact solver: " + std::to_string(pool.size()) +
                               " candidates exceed the cap of " +
                               std::to_string(options.max_candidates),
                           static_cast<double>(pool.size()));
  }

  SubsetSearch search(inst, std::move(pool));
  search.Run(GbcOracle(pc));

  Solution sol;
  sol.nodes = search.best().nodes;
  sol.cost = inst.CostOf(sol.nodes);
  sol.gbc = search.best().value;
  sol.algorithm = Algorithm::kExact;
  return sol;
}

}  // namespace mbc

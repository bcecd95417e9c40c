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

#include "mbc/greedy.h"

#include <algorithm>
#include <exception>
#include <stdexcept>
#include <thread>

#include "mbc/errors.h"
#include "selection.h"

namespace mbc {
namespace {

using internal::RatioScore;
using internal::StrictlyBetter;

std::vector<NodeId> CandidatePool(const Graph& g, const GreedyOptions& options) {
  std::vector<NodeId> pool;
  if (options.candidates.empty()) {
    pool.resize(g.num_nodes());
    for (NodeId v = 0; v < g.num_nodes(); ++v) pool[v] = v;
    return pool;
  }
  pool = options.candidates;
  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  if (pool.front() < 0 || pool.back() >= g.num_nodes()) {
    throw std::invalid_argument("candidate node id out of range");
  }
  return pool;
}

double AddAndNotify(GbcOracle& oracle, NodeId v, const GreedyOptions& options) {
  const double gain = oracle.Add(v);
  if (options.on_add) options.on_add(oracle, v, gain);
  return gain;
}

Solution MakeSolution(const CostedInstance& inst, const GbcOracle& oracle, Algorithm algo,
                      std::vector<NodeId> order) {
  Solution sol;
  sol.nodes.assign(oracle.members().begin(), oracle.members().end());
  std::sort(sol.nodes.begin(), sol.nodes.end());
  sol.cost = inst.CostOf(sol.nodes);
  sol.gbc = oracle.value();
  sol.algorithm = algo;
  sol.selection_order = std::move(order);
  return sol;
}

// One pass of the budgeted augmentation loop over pool \ C: pick the best
// ratio, keep it if it fits, drop it from the pool either way. Gains only
// change when C does, so they are recomputed after additions only.
void AugmentByRatio(const CostedInstance& inst, std::span<const NodeId> pool,
                    const GreedyOptions& options, GbcOracle& oracle, double& spent,
                    std::vector<NodeId>& order) {
  std::vector<NodeId> remaining;
  remaining.reserve(pool.size());
  for (NodeId v : pool) {
    if (!oracle.Contains(v)) remaining.push_back(v);
  }
  std::vector<double> gains(remaining.size());
  bool stale = true;
  while (!remaining.empty()) {
    if (stale) {
      for (size_t i = 0; i < remaining.size(); ++i) gains[i] = oracle.Gain(remaining[i]);
      stale = false;
    }
    size_t best = 0;
    double best_score = RatioScore(gains[0], inst.cost[remaining[0]]);
    for (size_t i = 1; i < remaining.size(); ++i) {
      const double score = RatioScore(gains[i], inst.cost[remaining[i]]);
      if (StrictlyBetter(score, best_score)) {
        best = i;
        best_score = score;
      }
    }
    const NodeId u = remaining[best];
    if (spent + inst.cost[u] <= inst.budget) {
      AddAndNotify(oracle, u, options);
      spent += inst.cost[u];
      order.push_back(u);
      stale = true;
    }
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    gains.erase(gains.begin() + static_cast<std::ptrdiff_t>(best));
  }
}

std::vector<std::vector<NodeId>> Initializations(const CostedInstance& inst,
                                                 std::span<const NodeId> pool) {
  std::vector<std::vector<NodeId>> inits{{}};
  const size_t p = pool.size();
  auto fits = [&](std::initializer_list<NodeId> nodes) {
    double total = 0.0;
    for (NodeId v : nodes) total += inst.cost[v];
    return total <= inst.budget;
  };
  for (size_t a = 0; a < p; ++a) {
    if (fits({pool[a]})) inits.push_back({pool[a]});
  }
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = a + 1; b < p; ++b) {
      if (fits({pool[a], pool[b]})) inits.push_back({pool[a], pool[b]});
    }
  }
  for (size_t a = 0; a < p; ++a) {
    for (size_t b = a + 1; b < p; ++b) {
      for (size_t c = b + 1; c < p; ++c) {
        if (fits({pool[a], pool[b], pool[c]})) inits.push_back({pool[a], pool[b], pool[c]});
      }
    }
  }
  return inits;
}

}  // namespace

std::string_view AlgorithmName(Algorithm algo) {
  switch (algo) {
    case Algorithm::kUnit:
      return "unit";
    case Algorithm::kRatio:
      return "ratio";
    case Algorithm::kModified:
      return "modified";
    case Algorithm::kTree:
      return "tree";
    case Algorithm::kExact:
      return "exact";
  }
  return "unknown";
}

Solution GreedyUnit(const CostedInstance& inst, const PathCounts& pc, int k,
                    const GreedyOptions& options) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (!inst.HasUnitCosts()) {
    throw InvalidInstanceError("unit-cost greedy requires every cost to be 1");
  }
  const std::vector<NodeId> pool = CandidatePool(inst.graph, options);
  GbcOracle oracle(pc);
  std::vector<NodeId> order;
  std::vector<NodeId> remaining = pool;
  const size_t steps = std::min(static_cast<size_t>(k), pool.size());
  for (size_t step = 0; step < steps; ++step) {
    size_t best = 0;
    double best_gain = oracle.Gain(remaining[0]);
    for (size_t i = 1; i < remaining.size(); ++i) {
      const double gain = oracle.Gain(remaining[i]);
      if (StrictlyBetter(gain, best_gain)) {
        best = i;
        best_gain = gain;
      }
    }
    AddAndNotify(oracle, remaining[best], options);
    order.push_back(remaining[best]);
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return MakeSolution(inst, oracle, Algorithm::kUnit, std::move(order));
}

Solution GreedyRatio(const CostedInstance& inst, const PathCounts& pc,
                     const GreedyOptions& options) {
  const std::vector<NodeId> pool = CandidatePool(inst.graph, options);
  GbcOracle oracle(pc);
  double spent = 0.0;
  std::vector<NodeId> order;
  AugmentByRatio(inst, pool, options, oracle, spent, order);
  return MakeSolution(inst, oracle, Algorithm::kRatio, std::move(order));
}

Solution GreedyModified(const CostedInstance& inst, const PathCounts& pc,
                        const GreedyOptions& options) {
  const std::vector<NodeId> pool = CandidatePool(inst.graph, options);
  const std::vector<std::vector<NodeId>> inits = Initializations(inst, pool);
  const GbcOracle empty(pc);
  std::vector<Solution> results(inits.size());

  auto run = [&](size_t index) {
    GbcOracle oracle = empty;
    double spent = 0.0;
    std::vector<NodeId> order;
    for (NodeId v : inits[index]) {
      AddAndNotify(oracle, v, options);
      spent += inst.cost[v];
      order.push_back(v);
    }
    AugmentByRatio(inst, pool, options, oracle, spent, order);
    results[index] = MakeSolution(inst, oracle, Algorithm::kModified, std::move(order));
    results[index].init_seed = inits[index];
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    for (size_t i = 0; i < inits.size(); ++i) run(i);
  } else {
    std::vector<std::exception_ptr> failures(threads);
    {
      std::vector<std::jthread> workers;
      for (int t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
          try {
            for (size_t i = t; i < inits.size(); i += threads) run(i);
          } catch (...) {
            failures[t] = std::current_exception();
          }
        });
      }
    }
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  // Merge in initialization order so the outcome does not depend on threads.
  size_t best = 0;
  for (size_t i = 1; i < results.size(); ++i) {
    if (StrictlyBetter(results[i].gbc, results[best].gbc)) best = i;
  }
  return std::move(results[best]);
}

}  // namespace mbc

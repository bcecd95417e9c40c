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

#ifndef MBC_COVERAGE_H_
#define MBC_COVERAGE_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mbc/graph.h"
#include "mbc/path_counts.h"

namespace mbc {

// One shortest path between an unordered pair, weighted 2 / sigma(s,t) so
// totals come out in ordered-pair units.
struct CoverageElement {
  NodeId s = 0;
  NodeId t = 0;
  double weight = 0.0;
  std::vector<NodeId> path;
};

// Budgeted maximum coverage instance: node v owns the set of shortest paths
// passing through it, at cost c(v).
struct CoverageInstance {
  std::vector<CoverageElement> elements;
  std::vector<std::vector<int>> sets;  // sets[v] = element indices, ascending
  std::vector<double> set_cost;
  double budget = 0.0;
};

inline constexpr size_t kDefaultCoverageElementCap = 100000;

// Materializes every shortest path. Exponential in general; throws
// CapExceededError once more than `max_elements` elements would be built.
CoverageInstance ReduceToCoverage(const CostedInstance& inst, const PathCounts& pc,
                                  size_t max_elements = kDefaultCoverageElementCap);

// Total weight of elements covered by the union of the chosen sets.
double CoverageWeight(const CoverageInstance& ci, std::span<const NodeId> chosen);

struct CoverageSolution {
  std::vector<NodeId> order;  // sets in the order the greedy picked them
  double weight = 0.0;
  double cost = 0.0;
};

// Unit-cost greedy over sets: k picks of maximum marginal weight.
CoverageSolution CoverageGreedyUnit(const CoverageInstance& ci, int k);

// Ratio greedy with discard-and-continue under the instance budget.
CoverageSolution CoverageGreedyBudgeted(const CoverageInstance& ci);

// {"elements":[{"pair":[s,t],"weight":w}],"sets":{label:[indices]},
//  "costs":{label:c},"budget":b}
std::string CoverageToJson(const CoverageInstance& ci, const Graph& g);

}  // namespace mbc

#endif  // MBC_COVERAGE_H_

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

#ifndef MBC_GREEDY_H_
#define MBC_GREEDY_H_

#include <functional>
#include <vector>

#include "mbc/gbc.h"
#include "mbc/graph.h"
#include "mbc/path_counts.h"
#include "mbc/solution.h"

namespace mbc {

struct GreedyOptions {
  // Restricts the nodes the solver may pick. Empty means every node.
  std::vector<NodeId> candidates;
  // Worker threads for the initializations of GreedyModified.
  int threads = 1;
  // Called after every oracle addition with the updated oracle, the node
  // just added and the gain predicted for it before the addition. With
  // threads > 1 the callback may run concurrently.
  std::function<void(const GbcOracle&, NodeId, double)> on_add;
};

// Unit-cost greedy: k times add the node of maximum gain, smallest id first
// on ties. Requires unit costs.
Solution GreedyUnit(const CostedInstance& inst, const PathCounts& pc, int k,
                    const GreedyOptions& options = {});

// Budgeted greedy from the empty set: repeatedly take the candidate with the
// best gain/cost ratio, adding it only if it still fits the budget and
// dropping it from the pool either way.
Solution GreedyRatio(const CostedInstance& inst, const PathCounts& pc,
                     const GreedyOptions& options = {});

// The ratio greedy run from every feasible initialization of at most three
// nodes; returns the best outcome. Ties go to the earliest initialization in
// (size, lexicographic) order.
Solution GreedyModified(const CostedInstance& inst, const PathCounts& pc,
                        const GreedyOptions& options = {});

}  // namespace mbc

#endif  // MBC_GREEDY_H_

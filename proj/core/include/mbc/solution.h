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

#ifndef MBC_SOLUTION_H_
#define MBC_SOLUTION_H_

#include <string_view>
#include <vector>

#include "mbc/graph.h"

namespace mbc {

enum class Algorithm { kUnit, kRatio, kModified, kTree, kExact };

std::string_view AlgorithmName(Algorithm algo);

// A feasible node set together with its cost and GBC (ordered-pair units).
struct Solution {
  std::vector<NodeId> nodes;  // sorted ascending
  double cost = 0.0;
  double gbc = 0.0;
  Algorithm algorithm = Algorithm::kExact;
  // Greedy solvers only: nodes in the order they were added, and for the
  // modified greedy the initialization that produced the winner.
  std::vector<NodeId> selection_order;
  std::vector<NodeId> init_seed;
};

}  // namespace mbc

#endif  // MBC_SOLUTION_H_

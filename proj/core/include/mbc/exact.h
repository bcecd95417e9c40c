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

#ifndef MBC_EXACT_H_
#define MBC_EXACT_H_

#include <vector>

#include "mbc/graph.h"
#include "mbc/path_counts.h"
#include "mbc/solution.h"

namespace mbc {

inline constexpr int kMaxExactCandidates = 25;

struct ExactOptions {
  // Only these nodes may be chosen. Empty means every node.
  std::vector<NodeId> candidates;
  int max_candidates = kMaxExactCandidates;
};

// Brute-force optimum by enumerating every feasible subset of the
// candidates. Ties prefer fewer nodes, then the lexicographically smaller
// set. Throws CapExceededError beyond `max_candidates` candidates.
Solution SolveExact(const CostedInstance& inst, const PathCounts& pc,
                    const ExactOptions& options = {});

}  // namespace mbc

#endif  // MBC_EXACT_H_

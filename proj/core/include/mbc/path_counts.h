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

#ifndef MBC_PATH_COUNTS_H_
#define MBC_PATH_COUNTS_H_

#include <cstdint>
#include <vector>

#include "mbc/graph.h"

namespace mbc {

// All-pairs hop distances and shortest-path counts, dense n x n row-major.
// Counts are doubles: they grow exponentially on some families.
class PathCounts {
 public:
  PathCounts() = default;
  explicit PathCounts(const Graph& g);

  int num_nodes() const { return n_; }
  int32_t dist(NodeId s, NodeId t) const { return dist_[Index(s, t)]; }
  double sigma(NodeId s, NodeId t) const { return sigma_[Index(s, t)]; }

  const int32_t* dist_row(NodeId s) const { return dist_.data() + Index(s, 0); }
  const double* sigma_row(NodeId s) const { return sigma_.data() + Index(s, 0); }

  // True iff v lies on at least one shortest s-t path (endpoints included).
  bool OnShortestPath(NodeId s, NodeId v, NodeId t) const {
    return dist(s, v) + dist(v, t) == dist(s, t);
  }

 private:
  size_t Index(NodeId s, NodeId t) const {
    return static_cast<size_t>(s) * static_cast<size_t>(n_) + static_cast<size_t>(t);
  }

  int n_ = 0;
  std::vector<int32_t> dist_;
  std::vector<double> sigma_;
};

// One breadth-first sweep per source, O(nm) overall.
PathCounts ComputePathCounts(const Graph& g);

inline constexpr double kDefaultPathEnumerationCap = 1e6;

// Every shortest s-t path as a node sequence, in lexicographic order.
// Throws CapExceededError (carrying sigma(s,t)) when sigma(s,t) > cap.
std::vector<std::vector<NodeId>> EnumerateShortestPaths(
    const Graph& g, const PathCounts& pc, NodeId s, NodeId t,
    double cap = kDefaultPathEnumerationCap);

}  // namespace mbc

#endif  // MBC_PATH_COUNTS_H_

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

#include "mbc/path_counts.h"

#include <string>

#include "mbc/errors.h"

namespace mbc {

PathCounts::PathCounts(const Graph& g) : n_(g.num_nodes()) {
  const size_t cells = static_cast<size_t>(n_) * static_cast<size_t>(n_);
  dist_.assign(cells, -1);
  sigma_.assign(cells, 0.0);
  std::vector<NodeId> queue(n_);
  for (NodeId s = 0; s < n_; ++s) {
    int32_t* dist = dist_.data() + Index(s, 0);
    double* sigma = sigma_.data() + Index(s, 0);
    dist[s] = 0;
    sigma[s] = 1.0;
    size_t head = 0;
    size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      NodeId v = queue[head++];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue[tail++] = w;
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
  }
}

PathCounts ComputePathCounts(const Graph& g) { return PathCounts(g); }

std::vector<std::vector<NodeId>> EnumerateShortestPaths(const Graph& g, const PathCounts& pc,
                                                        NodeId s, NodeId t, double cap) {
  if (pc.sigma(s, t) > cap) {
    throw CapExceededError("sigma(" + g.label(s) + "," + g.label(t) + ") exceeds cap",
                           pc.sigma(s, t));
  }
  std::vector<std::vector<NodeId>> paths;
  std::vector<NodeId> current{s};
  const int32_t total = pc.dist(s, t);
  // Depth-first walk on the shortest-path DAG; sorted neighbor lists give
  // lexicographic output.
  auto walk = [&](auto&& self, NodeId v) -> void {
    if (v == t) {
      paths.push_back(current);
      return;
    }
    const int32_t next = pc.dist(s, v) + 1;
    for (NodeId w : g.neighbors(v)) {
      if (pc.dist(s, w) == next && pc.dist(w, t) == total - next) {
        current.push_back(w);
        self(self, w);
        current.pop_back();
      }
    }
  };
  walk(walk, s);
  return paths;
}

}  // namespace mbc

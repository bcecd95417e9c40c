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

#ifndef MBC_GBC_H_
#define MBC_GBC_H_

#include <memory>
#include <span>
#include <vector>

#include "mbc/graph.h"
#include "mbc/path_counts.h"

namespace mbc {

// Group betweenness centrality, summed over ordered pairs s != t: every
// unordered pair counts twice, so GBC(V) = n(n-1). Covered-path counts come
// from a per-source DP on the shortest-path DAG counting paths that avoid
// the group.
double GbcDirect(const Graph& g, const PathCounts& pc, std::span<const NodeId> group);

// Same sum restricted to the given ordered pairs. Duplicates are ignored.
double GbcModified(const Graph& g, const PathCounts& pc, std::span<const NodePair> pairs,
                   std::span<const NodeId> group);

// Classic single-node betweenness (ordered pairs, endpoints excluded).
std::vector<double> BrandesBetweenness(const Graph& g);

// Incremental GBC over a growing group C.
//
// Keeps sigma_tilde(x, y): the number of shortest x-y paths containing no
// node of C. The diagonal holds 1 for x not in C and 0 otherwise, which lets
// gain and update treat endpoint pairs like any other pair.
//
// Gain queries and additions are O(n^2). Gain is read-only, so concurrent
// queries against one oracle are safe; Add needs exclusive access.
class GbcOracle {
 public:
  explicit GbcOracle(const PathCounts& pc);

  // GBC(C + v) - GBC(C); zero if v is already a member.
  double Gain(NodeId v) const;

  // Adds v and returns the realized gain. Throws ContractViolation (state
  // unchanged) if v is already a member and ConsistencyError if an entry
  // goes negative beyond rounding noise.
  double Add(NodeId v);

  double value() const { return value_; }
  bool Contains(NodeId v) const { return member_[v] != 0; }
  std::span<const NodeId> members() const { return members_; }
  int num_nodes() const { return n_; }
  double sigma_tilde(NodeId x, NodeId y) const { return tilde_[Index(x, y)]; }
  const PathCounts& path_counts() const { return *pc_; }

 private:
  size_t Index(NodeId x, NodeId y) const {
    return static_cast<size_t>(x) * static_cast<size_t>(n_) + static_cast<size_t>(y);
  }

  const PathCounts* pc_;
  int n_;
  std::vector<double> tilde_;
  std::shared_ptr<const std::vector<double>> inv_sigma_;  // shared by copies
  std::vector<NodeId> members_;
  std::vector<char> member_;
  double value_ = 0.0;
};

// Relative tolerance used to clamp rounding noise in sigma_tilde.
inline constexpr double kSigmaClampTolerance = 1e-6;

}  // namespace mbc

#endif  // MBC_GBC_H_

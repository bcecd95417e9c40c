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

#include "mbc/gbc.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mbc/errors.h"

namespace mbc {
namespace {

// Fills `avoid` with the number of shortest s-t paths containing no group
// member, for every t. `order` receives the BFS order from s.
void CountAvoidingPaths(const Graph& g, const PathCounts& pc, NodeId s,
                        const std::vector<char>& in_group, std::vector<double>& avoid,
                        std::vector<NodeId>& order) {
  const int n = g.num_nodes();
  const int32_t* dist = pc.dist_row(s);
  order.clear();
  order.push_back(s);
  std::vector<char> queued(n, 0);
  queued[s] = 1;
  for (size_t head = 0; head < order.size(); ++head) {
    for (NodeId w : g.neighbors(order[head])) {
      if (!queued[w]) {
        queued[w] = 1;
        order.push_back(w);
      }
    }
  }
  avoid[s] = in_group[s] ? 0.0 : 1.0;
  for (size_t i = 1; i < order.size(); ++i) {
    NodeId t = order[i];
    if (in_group[t]) {
      avoid[t] = 0.0;
      continue;
    }
    double count = 0.0;
    for (NodeId w : g.neighbors(t)) {
      if (dist[w] == dist[t] - 1) count += avoid[w];
    }
    avoid[t] = count;
  }
}

std::vector<char> GroupMask(int n, std::span<const NodeId> group) {
  std::vector<char> mask(n, 0);
  for (NodeId v : group) mask[v] = 1;
  return mask;
}

}  // namespace

double GbcDirect(const Graph& g, const PathCounts& pc, std::span<const NodeId> group) {
  const int n = g.num_nodes();
  if (group.empty()) return 0.0;
  std::vector<char> in_group = GroupMask(n, group);
  std::vector<double> avoid(n);
  std::vector<NodeId> order;
  order.reserve(n);
  double total = 0.0;
  for (NodeId s = 0; s < n; ++s) {
    CountAvoidingPaths(g, pc, s, in_group, avoid, order);
    const double* sigma = pc.sigma_row(s);
    for (NodeId t = 0; t < n; ++t) {
      if (t != s) total += (sigma[t] - avoid[t]) / sigma[t];
    }
  }
  return total;
}

double GbcModified(const Graph& g, const PathCounts& pc, std::span<const NodePair> pairs,
                   std::span<const NodeId> group) {
  const int n = g.num_nodes();
  std::vector<NodePair> sorted(pairs.begin(), pairs.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (group.empty() || sorted.empty()) return 0.0;
  std::vector<char> in_group = GroupMask(n, group);
  std::vector<double> avoid(n);
  std::vector<NodeId> order;
  double total = 0.0;
  for (size_t i = 0; i < sorted.size();) {
    const NodeId s = sorted[i].first;
    CountAvoidingPaths(g, pc, s, in_group, avoid, order);
    for (; i < sorted.size() && sorted[i].first == s; ++i) {
      const NodeId t = sorted[i].second;
      if (t == s) continue;
      total += (pc.sigma(s, t) - avoid[t]) / pc.sigma(s, t);
    }
  }
  return total;
}

std::vector<double> BrandesBetweenness(const Graph& g) {
  const int n = g.num_nodes();
  std::vector<double> bc(n, 0.0);
  std::vector<int32_t> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<NodeId> order;
  order.reserve(n);
  for (NodeId s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (size_t head = 0; head < order.size(); ++head) {
      NodeId v = order[head];
      for (NodeId w : g.neighbors(v)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          order.push_back(w);
        }
        if (dist[w] == dist[v] + 1) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      NodeId w = *it;
      for (NodeId v : g.neighbors(w)) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) bc[w] += delta[w];
    }
  }
  return bc;
}

GbcOracle::GbcOracle(const PathCounts& pc)
    : pc_(&pc), n_(pc.num_nodes()), member_(pc.num_nodes(), 0) {
  const size_t cells = static_cast<size_t>(n_) * static_cast<size_t>(n_);
  tilde_.resize(cells);
  auto inv = std::make_shared<std::vector<double>>(cells);
  for (NodeId x = 0; x < n_; ++x) {
    const double* sigma = pc.sigma_row(x);
    std::copy(sigma, sigma + n_, tilde_.begin() + Index(x, 0));
    for (NodeId y = 0; y < n_; ++y) (*inv)[Index(x, y)] = 1.0 / sigma[y];
  }
  inv_sigma_ = std::move(inv);
}

double GbcOracle::Gain(NodeId v) const {
  if (member_[v]) return 0.0;
  const int32_t* dist_v = pc_->dist_row(v);
  const double* tilde_v = tilde_.data() + Index(v, 0);
  double total = 0.0;
  for (NodeId x = 0; x < n_; ++x) {
    const double through = tilde_v[x];  // sigma_tilde(x, v) by symmetry
    if (through == 0.0) continue;
    const int32_t dxv = dist_v[x];
    const int32_t* dist_x = pc_->dist_row(x);
    const double* inv = inv_sigma_->data() + Index(x, 0);
    double row = 0.0;
    for (NodeId y = 0; y < n_; ++y) {
      if (dist_x[y] == dxv + dist_v[y]) row += tilde_v[y] * inv[y];
    }
    // The x == y term only satisfies the distance test when x == v.
    if (x == v) row -= tilde_v[v] * inv[v];
    total += through * row;
  }
  return std::max(total, 0.0);
}

double GbcOracle::Add(NodeId v) {
  if (v < 0 || v >= n_) throw ContractViolation("oracle: node id out of range");
  if (member_[v]) {
    throw ContractViolation("oracle: node " + std::to_string(v) + " is already a member");
  }
  const double gain = Gain(v);
  const int32_t* dist_v = pc_->dist_row(v);
  const std::vector<double> through(tilde_.begin() + Index(v, 0),
                                    tilde_.begin() + Index(v, 0) + n_);
  for (NodeId x = 0; x < n_; ++x) {
    const double left = through[x];
    if (left == 0.0) continue;
    const int32_t dxv = dist_v[x];
    const int32_t* dist_x = pc_->dist_row(x);
    const double* sigma_x = pc_->sigma_row(x);
    double* row = tilde_.data() + Index(x, 0);
    for (NodeId y = 0; y < n_; ++y) {
      if (dist_x[y] != dxv + dist_v[y]) continue;
      double updated = row[y] - left * through[y];
      if (updated < 0.0) {
        if (-updated > kSigmaClampTolerance * sigma_x[y]) {
          throw ConsistencyError("oracle: sigma_tilde(" + std::to_string(x) + "," +
                                 std::to_string(y) + ") became negative");
        }
        updated = 0.0;
      }
      row[y] = updated;
    }
  }
  member_[v] = 1;
  members_.push_back(v);
  value_ += gain;
  return gain;
}

}  // namespace mbc

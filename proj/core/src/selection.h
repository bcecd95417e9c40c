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

#ifndef MBC_SRC_SELECTION_H_
#define MBC_SRC_SELECTION_H_

#include <algorithm>
#include <cmath>
#include <limits>

namespace mbc::internal {

// Scores within this relative distance of the incumbent count as ties, so
// rounding noise never overrides the smallest-id rule.
inline constexpr double kTieTolerance = 1e-9;

inline bool StrictlyBetter(double score, double incumbent) {
  if (std::isinf(incumbent)) return false;
  if (std::isinf(score)) return true;
  return score > incumbent + kTieTolerance * std::max(1.0, std::abs(incumbent));
}

// gain / cost, with free nodes of positive gain ranked first.
inline double RatioScore(double gain, double cost) {
  if (cost == 0.0) return gain > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  return gain / cost;
}

}  // namespace mbc::internal

#endif  // MBC_SRC_SELECTION_H_

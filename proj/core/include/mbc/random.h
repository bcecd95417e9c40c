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

#ifndef MBC_RANDOM_H_
#define MBC_RANDOM_H_

#include <cstdint>
#include <random>

namespace mbc {

// Seeded generator whose derived draws are identical on every platform.
// std::uniform_*_distribution is implementation-defined, so integer and
// real draws are derived from the raw 64-bit stream here.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Next() { return engine_(); }
  // Uniform in [lo, hi], inclusive.
  int64_t UniformInt(int64_t lo, int64_t hi);
  // Uniform in [0, 1).
  double UniformReal();
  bool Bernoulli(double p) { return UniformReal() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace mbc

#endif  // MBC_RANDOM_H_

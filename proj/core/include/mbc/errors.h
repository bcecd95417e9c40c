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

#ifndef MBC_ERRORS_H_
#define MBC_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mbc {

// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LoadErrorKind {
  kMalformed,
  kEmpty,
  kSelfLoop,
  kDuplicateEdge,
  kDisconnected,
  kUnknownLabel,
};

std::string_view ToString(LoadErrorKind kind);

// Raised while reading a graph, cost file or JSON instance.
class LoadError : public Error {
 public:
  LoadError(LoadErrorKind kind, const std::string& message);
  LoadErrorKind kind() const { return kind_; }

 private:
  LoadErrorKind kind_;
};

// The instance is well-formed but violates an algorithm's precondition
// (not a tree, non-unit costs for the unit-cost greedy, ...).
class InvalidInstanceError : public Error {
 public:
  using Error::Error;
};

// An enumeration-based routine would exceed its configured cap.
class CapExceededError : public Error {
 public:
  CapExceededError(const std::string& message, double count);
  double count() const { return count_; }

 private:
  double count_;
};

// Internal bookkeeping disagrees with itself beyond rounding noise.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

// Caller broke an API contract (e.g. adding a node twice to an oracle).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mbc

#endif  // MBC_ERRORS_H_

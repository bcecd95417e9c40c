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

#include "mbc/errors.h"

namespace mbc {

std::string_view ToString(LoadErrorKind kind) {
  switch (kind) {
    case LoadErrorKind::kMalformed:
      return "malformed";
    case LoadErrorKind::kEmpty:
      return "empty";
    case LoadErrorKind::kSelfLoop:
      return "self-loop";
    case LoadErrorKind::kDuplicateEdge:
      return "duplicate-edge";
    case LoadErrorKind::kDisconnected:
      return "disconnected";
    case LoadErrorKind::kUnknownLabel:
      return "unknown-label";
  }
  return "unknown";
}

LoadError::LoadError(LoadErrorKind kind, const std::string& message)
    : Error(std::string(ToString(kind)) + ": " + message), kind_(kind) {}

CapExceededError::CapExceededError(const std::string& message, double count)
    : Error(message), count_(count) {}

}  // namespace mbc

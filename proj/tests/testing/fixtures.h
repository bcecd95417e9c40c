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

#ifndef MBC_TESTS_TESTING_FIXTURES_H_
#define MBC_TESTS_TESTING_FIXTURES_H_

#include <string>

#include "mbc/graph.h"

namespace mbc::testing {

inline Graph P3() { return ParseEdgeList("a b\nb c\n"); }
inline Graph C4() { return ParseEdgeList("0 1\n1 2\n2 3\n3 0\n"); }
inline Graph K4() { return ParseEdgeList("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n"); }
inline Graph P4() { return ParseEdgeList("a b\nb c\nc d\n"); }
// Centre "c" first so it gets id 0.
inline Graph Star(int leaves) {
  std::string text;
  for (int i = 1; i <= leaves; ++i) text += "c l" + std::to_string(i) + "\n";
  return ParseEdgeList(text);
}

inline NodeId Id(const Graph& g, const std::string& label) { return *g.FindLabel(label); }

}  // namespace mbc::testing

#endif  // MBC_TESTS_TESTING_FIXTURES_H_

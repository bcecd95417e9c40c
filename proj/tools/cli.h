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

#ifndef MBC_TOOLS_CLI_H_
#define MBC_TOOLS_CLI_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace mbc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitValidation = 3;
inline constexpr int kExitConsistency = 4;

struct RunReport {
  int n = 0;
  int64_t m = 0;
  double budget = 0.0;
  std::string algo;
  std::vector<std::string> nodes;
  double cost = 0.0;
  double gbc = 0.0;
  double time_ms = 0.0;
  uint64_t seed = 0;
};

// 12 significant digits; integral values keep a trailing ".0".
std::string FormatNumber(double value);

std::string ReportToJson(const RunReport& report);

// Runs one command. Reports go to `out`, diagnostics to `err`.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mbc::cli

#endif  // MBC_TOOLS_CLI_H_

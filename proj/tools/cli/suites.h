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

#ifndef WEYLRET_TOOLS_CLI_SUITES_H_
#define WEYLRET_TOOLS_CLI_SUITES_H_

#include <cstdint>
#include <string>
#include <vector>

#include "weylret/json_io.h"
#include "weylret/rational.h"

namespace weylret::cli {

struct SuiteOptions {
  uint64_t seed = 1;
  // Random matrices per matrix size in the orbit suites.
  int count = 100;
  double budget_seconds = 600;
};

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<CaseResult> cases;
  double seconds = 0;

  int passed() const;
  bool ok() const { return passed() == static_cast<int>(cases.size()); }
  // Deterministic for fixed options: no timing fields.
  Json ToJson() const;
};

const std::vector<std::string>& SuiteNames();

// Throws std::invalid_argument for an unknown suite.
SuiteReport RunSuite(const std::string& name, const SuiteOptions& options);

// The n x n matrix used as case `index` of the orbit suites: every sixth is
// generic, the rest sparse with densities 0.3 to 0.75.
RationalMatrix OrbitSuiteMatrix(int n, uint64_t seed, int index);

}  // namespace weylret::cli

#endif  // WEYLRET_TOOLS_CLI_SUITES_H_

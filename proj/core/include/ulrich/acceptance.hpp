// Copyright 2026 The ulrich Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ULRICH_ACCEPTANCE_HPP
#define ULRICH_ACCEPTANCE_HPP

#include <string>
#include <vector>

namespace ulrich {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 10;

/// Deterministic sample of degree tuples: s in 1..5, each degree in 1..4.
std::vector<std::vector<long>> acceptance_sample(std::size_t count = 200);

/// Runs one criterion (1..10). Never throws for a failed check; the failure
/// is reported in the result.
CriterionResult run_criterion(int id);

/// Runs every criterion on up to `jobs` threads; results are in id order.
std::vector<CriterionResult> run_acceptance(unsigned jobs = 1);

/// Parallelism from ULRICH_JOBS, defaulting to 1.
unsigned default_jobs();

}  // namespace ulrich

#endif  // ULRICH_ACCEPTANCE_HPP

/*
 * Copyright 2026 The SCET Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// End-to-end acceptance checks, shared by the acceptance test binary and the
// CLI selftest command. Each check prints nothing; callers render results.

#ifndef SCET_ACCEPTANCE_H_
#define SCET_ACCEPTANCE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace scet {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

inline constexpr int kCriterionCount = 11;

// Runs criterion `id` in [1, kCriterionCount] with its own seeded stream.
CriterionResult run_criterion(int id, std::uint64_t seed);

// Runs every criterion in order, reporting each as it finishes.
std::vector<CriterionResult> run_acceptance(
    std::uint64_t seed, const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [n] name: detail (t s)" or "FAIL ...".
std::string format_result(const CriterionResult& r);

}  // namespace scet

#endif  // SCET_ACCEPTANCE_H_

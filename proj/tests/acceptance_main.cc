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

// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if
// any fails. Optional arguments: --seed N, --only ID.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "scet/acceptance.h"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260501;
  int only = 0;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string flag = argv[i];
    if (flag == "--seed") {
      seed = std::stoull(argv[i + 1]);
    } else if (flag == "--only") {
      only = std::stoi(argv[i + 1]);
    } else {
      std::cerr << "unknown flag " << flag << "\n";
      return 2;
    }
  }
  int failed = 0;
  auto report = [&](const scet::CriterionResult& r) {
    std::cout << scet::format_result(r) << std::endl;
    failed += !r.passed;
  };
  if (only != 0) {
    report(scet::run_criterion(only, seed));
  } else {
    scet::run_acceptance(seed, report);
  }
  std::cout << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAIL")
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

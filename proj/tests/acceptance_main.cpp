// Copyright 2026 The hyperpath Authors
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

// Acceptance runner: one line per criterion, nonzero exit on any failure.

#include <cstdio>
#include <cstdlib>

#include "hyperpath/verify.hpp"

int main() {
  const auto results = hyperpath::run_acceptance(hyperpath::VerifyOptions{});
  int failed = 0;
  for (const auto& r : results) {
    const auto status = hyperpath::to_string(r.status);
    std::printf("[%s] %2d %-26s %8.2fs / %5.0fs  %s\n", status.c_str(), r.id, r.name.c_str(), r.seconds,
                r.limit_seconds, r.detail.c_str());
    if (r.status != hyperpath::CriterionStatus::Pass) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failed, results.size());
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

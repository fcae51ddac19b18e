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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace hyperpath {

/// Number of acceptance criteria.
inline constexpr int kCriteriaCount = 10;

/// Exact deletion distance from F^4_{1,3} to a union of at most four
/// 2-stars, frozen after the first exhaustive run.
inline constexpr std::uint64_t kF413DeletionGolden = 8;

enum class CriterionStatus { Pass, Fail, Skipped };

std::string to_string(CriterionStatus s);

struct CriterionResult {
  int id = 0;
  std::string name;
  CriterionStatus status = CriterionStatus::Skipped;
  double seconds = 0;
  double limit_seconds = 0;
  std::string detail;
  nlohmann::json data = nlohmann::json::object();
};

struct VerifyOptions {
  /// Wall-clock budget for the whole run; criteria starting after it is
  /// spent are skipped.
  double budget_seconds = 1800;
  /// Subset of criterion ids to run; empty means all.
  std::vector<int> only;
  std::uint64_t seed = 20260101;
  int random_subgraphs = 1000;
};

std::vector<CriterionResult> run_acceptance(const VerifyOptions& opts);

/// Report object: {"criteria": [...], "summary": {...}}.
nlohmann::json to_json(const std::vector<CriterionResult>& results, const VerifyOptions& opts);

}  // namespace hyperpath

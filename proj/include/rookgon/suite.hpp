// Copyright 2026 The rookgon Authors
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

#ifndef ROOKGON_SUITE_HPP_
#define ROOKGON_SUITE_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rookgon/json_io.hpp"

namespace rookgon {

enum class ClaimStatus { kPass, kFail, kSkipped };

std::string_view StatusName(ClaimStatus status);

struct ClaimResult {
  std::string id;
  std::string reference;  // which published statement the claim checks
  Json parameters;
  Json expected;
  Json computed;
  ClaimStatus status = ClaimStatus::kSkipped;
  std::string reason;  // set for skipped claims
  std::optional<double> wall_ms;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<ClaimResult> claims;

  bool passed() const;
};

struct SuiteOptions {
  // Claims whose declared cost exceeds the remaining wall-clock budget are
  // skipped. The budget is only consulted between claims.
  std::optional<double> budget_secs;
  int threads = 1;
  std::uint64_t seed = 0;
  // Record per-claim wall time in the report (makes it non-reproducible).
  bool timing = false;
  std::function<void(const ClaimResult&)> on_claim;
};

// Names accepted by RunSuite.
std::vector<std::string> SuiteNames();
// Claim ids of a suite in execution order; Error kUsage for an unknown name.
std::vector<std::string> SuiteClaimIds(const std::string& name);

VerificationReport RunSuite(const std::string& name, const SuiteOptions& options);

Json VerificationReportToJson(const VerificationReport& report);

}  // namespace rookgon

#endif  // ROOKGON_SUITE_HPP_

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

// Acceptance run: executes the paper-full suite once and reports one line per
// criterion, then checks that paper-small reports are byte-identical across
// worker counts. All values are compared exactly (tolerance 0); runtime limits
// are per claim unless marked combined.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rookgon/json_io.hpp"
#include "rookgon/suite.hpp"

using namespace rookgon;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> prefixes;  // claim ids belonging to it
  double limit_secs;                  // per claim
  bool combined = false;              // limit applies to the sum instead
  std::map<std::string, double> overrides = {};
};

bool StartsWith(const std::string& s, const std::string& prefix) {
  return s.rfind(prefix, 0) == 0;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "gonality (n-1)m with exhaustive refutation",
       {"gon1-2x2", "gon1-2x3", "gon1-2x4", "gon1-3x3", "gon1-3x4", "gon1-4x4"}, 60, false,
       {{"gon1-3x4", 600}, {"gon1-4x4", 4 * 3600}}},
      {2, "certificate divisors have positive rank", {"cert1-"}, 120},
      {3, "second and third gonality, rank-3 all-ones, gonality chain",
       {"gon2-", "gon3-", "cert3-", "gon-chain-"}, 600},
      {4, "star and T* scramble orders",
       {"order-star-4x4", "hitting-star-6x6", "hitting-tstar", "tstar-min-egg-cut"}, 600, false,
       {{"order-star-4x4", 60}, {"tstar-min-egg-cut", 3600}}},
      {5, "scramble families and the staircase avoidance set",
       {"order-uniform1-", "order-uniform2-3x", "hitting-star-4x6", "staircase-avoidance-"},
       600},
      {6, "scrambles on K_2 x K_n x K_m", {"order-uniform2-2x2x"}, 300},
      {7, "diagonal layer avoidance set on K_3^3", {"diagonal-avoidance-3"}, 60},
      {8, "exhaustive cut bound, tight at a full row", {"cut-bound-"}, 600},
      {9, "divisor properties",
       {"reduction-uniqueness", "firing-reversibility", "burn-complete-6", "riemann-roch",
        "symmetry-agreement"},
       300, true},
  };

  SuiteOptions options;
  options.timing = true;
  options.on_claim = [](const ClaimResult& c) {
    std::fprintf(stderr, "  %-8s %-28s %10.1f ms\n", std::string(StatusName(c.status)).c_str(),
                 c.id.c_str(), c.wall_ms.value_or(0));
  };
  const VerificationReport full = RunSuite("paper-full", options);

  int failed = 0;
  for (const Criterion& crit : criteria) {
    int claims = 0, passed = 0;
    double total_ms = 0, worst_ms = 0;
    std::string problems;
    for (const ClaimResult& c : full.claims) {
      bool mine = false;
      for (const std::string& p : crit.prefixes) mine = mine || StartsWith(c.id, p);
      if (!mine) continue;
      ++claims;
      const double ms = c.wall_ms.value_or(0);
      total_ms += ms;
      worst_ms = std::max(worst_ms, ms);
      double limit = crit.limit_secs;
      if (auto it = crit.overrides.find(c.id); it != crit.overrides.end()) limit = it->second;
      if (c.status != ClaimStatus::kPass) {
        problems += " " + c.id + "=" + std::string(StatusName(c.status));
      } else if (!crit.combined && ms > limit * 1000) {
        problems += " " + c.id + " over " + std::to_string(static_cast<int>(limit)) + "s";
      } else {
        ++passed;
      }
    }
    if (crit.combined && total_ms > crit.limit_secs * 1000) {
      problems += " combined time over " + std::to_string(static_cast<int>(crit.limit_secs)) + "s";
    }
    const bool ok = claims > 0 && problems.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s [%d/%d claims, tolerance exact, %s %.1f s]%s\n",
                ok ? "PASS" : "FAIL", crit.number, crit.title.c_str(), passed, claims,
                crit.combined ? "total" : "slowest", (crit.combined ? total_ms : worst_ms) / 1000,
                problems.c_str());
  }

  // Determinism: byte-identical paper-small reports for 1, 2 and 8 workers.
  std::string reference;
  bool identical = true;
  std::string sizes;
  for (int threads : {1, 2, 8}) {
    SuiteOptions o;
    o.threads = threads;
    const std::string text = Dump(VerificationReportToJson(RunSuite("paper-small", o)));
    if (reference.empty()) reference = text;
    identical = identical && text == reference;
    sizes += " " + std::to_string(threads) + ":" + std::to_string(text.size()) + "B";
  }
  failed += !identical;
  std::printf("%s criterion 10: paper-small reports identical for 1, 2, 8 workers [%s ]\n",
              identical ? "PASS" : "FAIL", sizes.c_str());

  std::printf("%s: %d of 10 criteria failed\n", failed ? "FAILED" : "OK", failed);
  return failed ? 1 : 0;
}

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

#ifndef ROOKGON_REPORT_HPP_
#define ROOKGON_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rookgon/gonality.hpp"
#include "rookgon/json_io.hpp"
#include "rookgon/scramble.hpp"

namespace rookgon {

enum class ResultKind { kGonality, kOrder };
enum class TableFormat { kCsv, kJson };

// One line of a results table. Columns are always, in order:
// dims, k, value, witness_digest, time_ms.
struct ResultRow {
  ResultKind kind = ResultKind::kGonality;
  std::vector<int> dims;
  int k = 0;
  std::optional<std::int64_t> value;
  std::string witness_digest;
  std::optional<double> time_ms;

  bool operator==(const ResultRow&) const = default;
};

ResultRow MakeGonalityRow(std::span<const int> dims, const GonalityResult& r,
                          std::optional<double> time_ms = std::nullopt);
// `k` is the egg size of the family the scramble came from (0 if none).
ResultRow MakeOrderRow(std::span<const int> dims, int k, const OrderReport& r,
                       std::optional<double> time_ms = std::nullopt);

// Row for a finished gonality or scramble.order command report.
ResultRow RowFromReport(const Json& report);

// CSV (RFC 4180 quoting, header line first) or JSON with sorted keys.
// Rows of different kinds are rejected.
std::string EmitTable(std::span<const ResultRow> rows, TableFormat format);

// Inverse of EmitTable(..., kJson).
std::vector<ResultRow> ParseTableJson(const std::string& text);

std::string_view KindName(ResultKind kind);

}  // namespace rookgon

#endif  // ROOKGON_REPORT_HPP_

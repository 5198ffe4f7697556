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

#include "rookgon/report.hpp"

#include <sstream>

#include "rookgon/error.hpp"
#include "rookgon/hash.hpp"
#include "rookgon/json_io.hpp"

namespace rookgon {

namespace {

constexpr int kDigestChars = 16;

std::string DimsText(const std::vector<int>& dims) {
  std::string out;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i > 0) out += 'x';
    out += std::to_string(dims[i]);
  }
  return out;
}

std::string CsvField(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

ResultKind KindFromName(const std::string& name) {
  if (name == "gonality") return ResultKind::kGonality;
  if (name == "order") return ResultKind::kOrder;
  Fail(ErrorCode::kParse, "unknown result kind '" + name + "'");
}

}  // namespace

std::string_view KindName(ResultKind kind) {
  return kind == ResultKind::kGonality ? "gonality" : "order";
}

ResultRow MakeGonalityRow(std::span<const int> dims, const GonalityResult& r,
                          std::optional<double> time_ms) {
  ResultRow row;
  row.kind = ResultKind::kGonality;
  row.dims.assign(dims.begin(), dims.end());
  row.k = r.k;
  if (r.value) row.value = *r.value;
  if (r.found()) row.witness_digest = Sha256Hex(Json(r.witness).dump()).substr(0, kDigestChars);
  row.time_ms = time_ms;
  return row;
}

ResultRow MakeOrderRow(std::span<const int> dims, int k, const OrderReport& r,
                       std::optional<double> time_ms) {
  ResultRow row;
  row.kind = ResultKind::kOrder;
  row.dims.assign(dims.begin(), dims.end());
  row.k = k;
  row.value = r.order;
  Json witness{{"max_avoidance", r.max_avoidance},
               {"cut_witness", r.cut_witness ? CutWitnessToJson(*r.cut_witness) : Json(nullptr)}};
  row.witness_digest = Sha256Hex(witness.dump()).substr(0, kDigestChars);
  row.time_ms = time_ms;
  return row;
}

ResultRow RowFromReport(const Json& report) {
  ResultRow row;
  try {
    row.dims = report.value("dims", Json::array()).get<std::vector<int>>();
    row.k = report.value("k", 0);
    if (report.contains("wall_ms")) row.time_ms = report.at("wall_ms").get<double>();
    if (report.contains("order")) {
      row.kind = ResultKind::kOrder;
      row.value = report.at("order").get<std::int64_t>();
      Json witness{{"max_avoidance", report.at("max_avoidance")},
                   {"cut_witness", report.at("cut_witness")}};
      row.witness_digest = Sha256Hex(witness.dump()).substr(0, kDigestChars);
    } else if (report.contains("degree_cap")) {
      row.kind = ResultKind::kGonality;
      if (!report.at("value").is_null()) {
        row.value = report.at("value").get<std::int64_t>();
        row.witness_digest = Sha256Hex(report.at("witness").dump()).substr(0, kDigestChars);
      }
    } else {
      Fail(ErrorCode::kInvalidArgument, "report is neither a gonality nor an order report");
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("malformed report: ") + e.what());
  }
  return row;
}

std::string EmitTable(std::span<const ResultRow> rows, TableFormat format) {
  for (const ResultRow& row : rows) {
    if (row.kind != rows.front().kind) {
      Fail(ErrorCode::kInvalidArgument, "table rows must all be of one kind");
    }
  }
  if (format == TableFormat::kCsv) {
    std::ostringstream out;
    out << "dims,k,value,witness_digest,time_ms\r\n";
    for (const ResultRow& row : rows) {
      std::ostringstream time;
      if (row.time_ms) time << *row.time_ms;
      out << CsvField(DimsText(row.dims)) << ',' << row.k << ','
          << (row.value ? std::to_string(*row.value) : std::string()) << ','
          << CsvField(row.witness_digest) << ',' << time.str() << "\r\n";
    }
    return out.str();
  }
  Json table;
  table["kind"] = rows.empty() ? Json(nullptr) : Json(KindName(rows.front().kind));
  table["rows"] = Json::array();
  for (const ResultRow& row : rows) {
    table["rows"].push_back({{"dims", row.dims},
                             {"k", row.k},
                             {"value", row.value ? Json(*row.value) : Json(nullptr)},
                             {"witness_digest", row.witness_digest},
                             {"time_ms", row.time_ms ? Json(*row.time_ms) : Json(nullptr)}});
  }
  return Dump(table);
}

std::vector<ResultRow> ParseTableJson(const std::string& text) {
  const Json table = ParseJson(text);
  std::vector<ResultRow> rows;
  if (!table.is_object() || !table.contains("rows") || !table.at("rows").is_array()) {
    Fail(ErrorCode::kParse, "table JSON needs a 'rows' array");
  }
  if (table.at("rows").empty()) return rows;
  const ResultKind kind = KindFromName(table.at("kind").get<std::string>());
  try {
    for (const Json& item : table.at("rows")) {
      ResultRow row;
      row.kind = kind;
      row.dims = item.at("dims").get<std::vector<int>>();
      row.k = item.at("k").get<int>();
      if (!item.at("value").is_null()) row.value = item.at("value").get<std::int64_t>();
      row.witness_digest = item.at("witness_digest").get<std::string>();
      if (!item.at("time_ms").is_null()) row.time_ms = item.at("time_ms").get<double>();
      rows.push_back(std::move(row));
    }
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bad table row: ") + e.what());
  }
  return rows;
}

}  // namespace rookgon

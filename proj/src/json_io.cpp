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

#include "rookgon/json_io.hpp"

#include <memory>
#include <set>
#include <utility>

#include "rookgon/error.hpp"

namespace rookgon {

namespace {

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Fail(ErrorCode::kParse, std::string("missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    Fail(ErrorCode::kParse, std::string("bad field '") + key + "': " + e.what());
  }
}

Json WitnessOrNull(const std::optional<CutWitness>& w) {
  return w ? CutWitnessToJson(*w) : Json(nullptr);
}

}  // namespace

Json GraphToJson(const MultiGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.Edges()) edges.push_back({e.u, e.v, e.multiplicity});
  Json j;
  j["vertex_count"] = g.vertex_count();
  j["edges"] = std::move(edges);
  j["dims"] = g.has_labels() ? Json(g.dims()) : Json(nullptr);
  return j;
}

MultiGraph GraphFromJson(const Json& j) {
  const int n = Field<int>(j, "vertex_count");
  const Json& raw = j.contains("edges") ? j.at("edges") : Json::array();
  if (!raw.is_array()) Fail(ErrorCode::kParse, "'edges' must be an array");
  std::vector<Edge> edges;
  std::set<std::pair<int, int>> seen;
  for (const Json& item : raw) {
    if (!item.is_array() || item.size() != 3) {
      Fail(ErrorCode::kParse, "each edge must be [u, v, multiplicity]");
    }
    Edge e{};
    try {
      e = {item[0].get<int>(), item[1].get<int>(), item[2].get<int>()};
    } catch (const nlohmann::json::exception& ex) {
      Fail(ErrorCode::kParse, std::string("bad edge: ") + ex.what());
    }
    if (e.u == e.v) {
      Fail(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v || !seen.emplace(e.u, e.v).second) {
      Fail(ErrorCode::kInvalidArgument,
           "edge list is not symmetric-canonical: each pair must appear once as [u, v] with u < v");
    }
    if (e.multiplicity < 1) {
      Fail(ErrorCode::kInvalidArgument, "edge multiplicity must be >= 1");
    }
    edges.push_back(e);
  }
  std::vector<int> dims;
  if (j.contains("dims") && !j.at("dims").is_null()) dims = Field<std::vector<int>>(j, "dims");
  return MultiGraph::FromEdges(n, edges, std::move(dims));
}

Json DivisorToJson(const Divisor& d) { return Json{{"chips", d}}; }

Divisor DivisorFromJson(const Json& j) { return Field<Divisor>(j, "chips"); }

Json ScrambleToJson(const Scramble& s) {
  Json j;
  j["host"] = GraphToJson(s.host());
  j["eggs"] = s.EggLists();
  return j;
}

Scramble ScrambleFromJson(const Json& j) {
  if (!j.is_object() || !j.contains("host")) Fail(ErrorCode::kParse, "missing field 'host'");
  const Json& host = j.at("host");
  std::shared_ptr<const MultiGraph> graph;
  if (host.is_array()) {
    graph = std::make_shared<const MultiGraph>(RookGraph(host.get<std::vector<int>>()));
  } else if (host.is_object() && !host.contains("vertex_count") && host.contains("dims")) {
    graph = std::make_shared<const MultiGraph>(
        RookGraph(Field<std::vector<int>>(host, "dims")));
  } else {
    graph = std::make_shared<const MultiGraph>(GraphFromJson(host));
  }
  return Scramble(graph, Field<std::vector<VertexList>>(j, "eggs"));
}

Json GonalityResultToJson(const GonalityResult& r) {
  Json j;
  j["k"] = r.k;
  j["degree_cap"] = r.degree_cap;
  j["found"] = r.found();
  j["value"] = r.value ? Json(*r.value) : Json(nullptr);
  j["witness"] = r.found() ? Json(r.witness) : Json(nullptr);
  j["exhaustive"] = r.exhaustive;
  Json refuted = Json::array();
  Json orbits = Json::array();
  for (const DegreeStats& s : r.degrees) {
    if (s.refuted) refuted.push_back(s.degree);
    orbits.push_back({s.degree, s.orbits});
  }
  j["degrees_refuted"] = std::move(refuted);
  j["orbit_counts"] = std::move(orbits);
  return j;
}

Json CutWitnessToJson(const CutWitness& w) {
  return Json{{"egg_a", w.egg_a},
              {"egg_b", w.egg_b},
              {"side_a", w.side_a},
              {"side_b", w.side_b},
              {"weight", w.weight}};
}

Json OrderReportToJson(const OrderReport& r) {
  Json j;
  j["hitting_number"] = r.hitting_number;
  j["max_avoidance"] = r.max_avoidance;
  j["min_egg_cut"] = r.min_egg_cut ? Json(*r.min_egg_cut) : Json("infinity");
  j["cut_witness"] = WitnessOrNull(r.cut_witness);
  j["order"] = r.order;
  return j;
}

Json CutBoundReportToJson(const CutBoundReport& r) {
  Json j;
  j["ok"] = r.ok;
  j["bound"] = r.bound;
  j["cuts_checked"] = r.cuts_checked;
  j["min_weight"] = r.min_weight;
  j["min_side"] = r.min_side;
  j["full_row_weight"] = r.full_row_weight;
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  return j;
}

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    Fail(ErrorCode::kParse, e.what());
  }
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace rookgon

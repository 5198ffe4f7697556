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

#ifndef ROOKGON_JSON_IO_HPP_
#define ROOKGON_JSON_IO_HPP_

#include <string>

#include "json.hpp"
#include "rookgon/divisor.hpp"
#include "rookgon/families.hpp"
#include "rookgon/gonality.hpp"
#include "rookgon/graph.hpp"
#include "rookgon/scramble.hpp"

namespace rookgon {

using Json = nlohmann::json;

// {"vertex_count": n, "edges": [[u, v, mult], ...], "dims": [...] | null}
// with u < v and edges in lexicographic order.
Json GraphToJson(const MultiGraph& g);
// Rejects loops, reversed or repeated pairs, and disconnected graphs.
MultiGraph GraphFromJson(const Json& j);

// {"chips": [...]}
Json DivisorToJson(const Divisor& d);
Divisor DivisorFromJson(const Json& j);

// {"host": <graph JSON or dims array>, "eggs": [[v, ...], ...]}
Json ScrambleToJson(const Scramble& s);
Scramble ScrambleFromJson(const Json& j);

Json GonalityResultToJson(const GonalityResult& r);
Json OrderReportToJson(const OrderReport& r);
Json CutWitnessToJson(const CutWitness& w);
Json CutBoundReportToJson(const CutBoundReport& r);

// Parses text, mapping syntax errors onto ErrorCode::kParse.
Json ParseJson(const std::string& text);

// Stable serialization used for every report: sorted keys, two-space indent,
// trailing newline.
std::string Dump(const Json& j);

}  // namespace rookgon

#endif  // ROOKGON_JSON_IO_HPP_

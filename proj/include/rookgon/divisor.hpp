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

#ifndef ROOKGON_DIVISOR_HPP_
#define ROOKGON_DIVISOR_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "rookgon/graph.hpp"
#include "rookgon/vertex_set.hpp"

namespace rookgon {

// Chip counts indexed by vertex. Divisors carry no graph reference; every
// operation takes the host explicitly.
using Divisor = std::vector<int>;

std::int64_t Degree(const Divisor& d);

// True iff every entry is >= 0, ignoring `exempt` when given.
bool IsEffectiveAwayFrom(const Divisor& d, std::optional<int> exempt);
inline bool IsEffective(const Divisor& d) {
  return IsEffectiveAwayFrom(d, std::nullopt);
}

// Divisor with one chip on v and zero elsewhere.
Divisor UnitDivisor(int vertex_count, int v);

// Fires every vertex of `a` once. Negative results are allowed.
Divisor FireSet(const MultiGraph& g, const Divisor& d, VertexMask a);

// d - L x where L is the Laplacian of g.
Divisor ApplyFirings(const MultiGraph& g, const Divisor& d,
                     const std::vector<std::int64_t>& firings);

struct BurnReport {
  VertexMask burnt = 0;
  VertexMask unburnt = 0;
  int source = 0;
};

// Dhar's burning process from `source`. Requires d effective away from the
// source (Error kPrecondition otherwise).
BurnReport DharBurn(const MultiGraph& g, const Divisor& d, int source);

struct ReductionResult {
  Divisor reduced;
  // Net firings per vertex with the base vertex normalized to zero, so that
  // reduced = input - L * firing_counts.
  std::vector<std::int64_t> firing_counts;
};

// The unique v-reduced divisor equivalent to d.
ReductionResult Reduce(const MultiGraph& g, const Divisor& d, int v);

bool IsWinnable(const MultiGraph& g, const Divisor& d);
bool Equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2);

// Chip totals per row (first coordinate fixed) and per column (second
// coordinate fixed) of a two dimensional labelled host.
struct LineTotals {
  std::vector<std::int64_t> rows;
  std::vector<std::int64_t> columns;
};
LineTotals PoorestLineStatistics(const MultiGraph& g, const Divisor& d);

}  // namespace rookgon

#endif  // ROOKGON_DIVISOR_HPP_

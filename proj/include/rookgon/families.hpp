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

#ifndef ROOKGON_FAMILIES_HPP_
#define ROOKGON_FAMILIES_HPP_

#include <cstdint>
#include <memory>
#include <optional>

#include "rookgon/graph.hpp"
#include "rookgon/scramble.hpp"

namespace rookgon {

// All connected (n-1)-subsets of K_n x K_m, 2 <= n <= m.
Scramble StarScramble(int n, int m);

// All connected k-subsets of the host.
Scramble UniformScramble(std::shared_ptr<const MultiGraph> host, int k);

// StarScramble(n, m) plus every axis-aligned 2x2 square. Only the 6x6 case
// (TStarScramble) has a known cut guarantee; other sizes are experimental.
Scramble SquareAugmentedStarScramble(int n, int m);
Scramble TStarScramble();

// Avoidance set of size m + 1 for StarScramble(n, m) when
// n >= 4 and n - 1 <= m < (n - 2)(n - 1). Writing m = k(n - 2) + r, the
// first k rows receive n - 2 vertices each in fresh columns and r + 1 more
// vertices go into the untouched block; for r = 0 row k gets n - 3 and two
// vertices are placed in the last unused column, rows k and k + 1.
VertexList StaircaseAvoidanceSet(int n, int m);

// On K_n x K_n x K_n (n >= 3): the two short lines through the corner plus
// the diagonal of every layer i >= 1. Induces n + 2 components of n - 1
// vertices each.
VertexList DiagonalLayerAvoidanceSet(int n);

struct CutBoundReport {
  bool ok = true;
  std::int64_t bound = 0;  // (n - 1) m
  std::int64_t cuts_checked = 0;
  std::int64_t min_weight = 0;
  VertexList min_side;  // first cut attaining min_weight
  std::optional<VertexList> counterexample;
  std::int64_t full_row_weight = 0;
};

inline constexpr int kExhaustiveCutLimit = 20;

// Checks |E(A, B)| >= (n - 1) m over every cut of K_n x K_m with both sides
// of size >= n - 1. Refuses hosts with more than kExhaustiveCutLimit vertices.
CutBoundReport ExhaustiveCutBoundCheck(int n, int m);

}  // namespace rookgon

#endif  // ROOKGON_FAMILIES_HPP_

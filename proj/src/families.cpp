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

#include "rookgon/families.hpp"

#include <limits>
#include <string>
#include <vector>

#include "rookgon/error.hpp"

namespace rookgon {

namespace {

std::shared_ptr<const MultiGraph> Rook2(int n, int m) {
  const std::vector<int> dims{n, m};
  return std::make_shared<const MultiGraph>(RookGraph(dims));
}

void CheckStarShape(int n, int m) {
  if (n < 2 || m < n) {
    Fail(ErrorCode::kInvalidArgument, "star scramble needs 2 <= n <= m");
  }
  if (n * m > kMaxVertices) Fail(ErrorCode::kInvalidSize, "host too large");
}

}  // namespace

Scramble StarScramble(int n, int m) {
  CheckStarShape(n, m);
  auto host = Rook2(n, m);
  return Scramble(host, ConnectedSubsets(*host, n - 1));
}

Scramble UniformScramble(std::shared_ptr<const MultiGraph> host, int k) {
  if (!host) Fail(ErrorCode::kInvalidArgument, "missing host");
  std::vector<VertexMask> eggs = ConnectedSubsets(*host, k);
  return Scramble(std::move(host), std::move(eggs));
}

Scramble SquareAugmentedStarScramble(int n, int m) {
  CheckStarShape(n, m);
  auto host = Rook2(n, m);
  std::vector<VertexMask> eggs = ConnectedSubsets(*host, n - 1);
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      for (int c1 = 0; c1 < m; ++c1) {
        for (int c2 = c1 + 1; c2 < m; ++c2) {
          eggs.push_back(Bit(r1 * m + c1) | Bit(r1 * m + c2) | Bit(r2 * m + c1) |
                         Bit(r2 * m + c2));
        }
      }
    }
  }
  return Scramble(host, std::move(eggs));
}

Scramble TStarScramble() { return SquareAugmentedStarScramble(6, 6); }

VertexList StaircaseAvoidanceSet(int n, int m) {
  if (n < 4 || m < n - 1 || m >= (n - 2) * (n - 1)) {
    Fail(ErrorCode::kInvalidArgument,
         "staircase construction needs n >= 4 and n - 1 <= m < (n - 2)(n - 1); got n = " +
             std::to_string(n) + ", m = " + std::to_string(m));
  }
  if (n * m > kMaxVertices) Fail(ErrorCode::kInvalidSize, "host too large");
  const int k = m / (n - 2);
  const int r = m % (n - 2);
  auto at = [m](int row, int col) { return row * m + col; };
  VertexMask chosen = 0;
  int col = 0;
  if (r >= 1) {
    for (int row = 0; row < k; ++row) {
      for (int j = 0; j < n - 2; ++j) chosen |= Bit(at(row, col++));
    }
    // r + 1 vertices in the block of untouched rows k.. and columns col..
    int placed = 0;
    for (int row = k; row < n && placed < r + 1; ++row) {
      for (int c = col; c < m && placed < r + 1; ++c, ++placed) chosen |= Bit(at(row, c));
    }
  } else {
    for (int row = 0; row < k; ++row) {
      const int width = row + 1 < k ? n - 2 : n - 3;
      for (int j = 0; j < width; ++j) chosen |= Bit(at(row, col++));
    }
    chosen |= Bit(at(k, m - 1)) | Bit(at(k + 1, m - 1));
  }

  const MultiGraph host = RookGraph(std::vector<int>{n, m});
  for (VertexMask component : InducedComponents(host, chosen)) {
    if (Count(component) > n - 2) {
      Fail(ErrorCode::kPrecondition, "staircase construction produced an egg");
    }
  }
  return ToList(chosen);
}

VertexList DiagonalLayerAvoidanceSet(int n) {
  if (n < 3) Fail(ErrorCode::kInvalidArgument, "diagonal layer set needs n >= 3");
  if (n * n * n > kMaxVertices) Fail(ErrorCode::kInvalidSize, "host too large");
  auto at = [n](int a, int b, int c) { return (a * n + b) * n + c; };
  VertexMask chosen = 0;
  for (int c = 1; c < n; ++c) chosen |= Bit(at(0, 0, c));
  for (int b = 1; b < n; ++b) chosen |= Bit(at(0, b, 0));
  for (int a = 1; a < n; ++a) {
    for (int c = 0; c < n; ++c) chosen |= Bit(at(a, c, c));
  }
  return ToList(chosen);
}

CutBoundReport ExhaustiveCutBoundCheck(int n, int m) {
  if (n < 2 || m < n) {
    Fail(ErrorCode::kInvalidArgument, "cut bound check needs 2 <= n <= m");
  }
  if (n * m > kExhaustiveCutLimit) {
    Fail(ErrorCode::kInvalidSize,
         "exhaustive check limited to " + std::to_string(kExhaustiveCutLimit) +
             " vertices (2^nm cuts); use a sampled check for larger hosts");
  }
  const MultiGraph g = RookGraph(std::vector<int>{n, m});
  const int v = n * m;
  CutBoundReport report;
  report.bound = static_cast<std::int64_t>(n - 1) * m;
  report.min_weight = std::numeric_limits<std::int64_t>::max();
  report.full_row_weight = CutWeight(g, AllVertices(m));

  std::vector<VertexMask> nbr(v);
  for (int u = 0; u < v; ++u) nbr[u] = g.neighbor_mask(u);
  // The last vertex always lies in B; each cut is visited once.
  const VertexMask limit = Bit(v - 1);
  for (VertexMask a = 1; a < limit; ++a) {
    const int size = Count(a);
    if (size < n - 1 || v - size < n - 1) continue;
    ++report.cuts_checked;
    std::int64_t weight = 0;
    for (VertexMask rest = a; rest != 0; rest &= rest - 1) {
      weight += Count(nbr[Lowest(rest)] & ~a);
    }
    if (weight < report.min_weight) {
      report.min_weight = weight;
      report.min_side = ToList(a);
    }
    if (weight < report.bound && report.ok) {
      report.ok = false;
      report.counterexample = ToList(a);
    }
  }
  return report;
}

}  // namespace rookgon

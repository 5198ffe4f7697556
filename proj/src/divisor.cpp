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

#include "rookgon/divisor.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "rookgon/error.hpp"

namespace rookgon {

namespace {

void CheckLength(const MultiGraph& g, const Divisor& d) {
  if (d.size() != static_cast<size_t>(g.vertex_count())) {
    Fail(ErrorCode::kInvalidArgument,
         "divisor has " + std::to_string(d.size()) + " entries, graph has " +
             std::to_string(g.vertex_count()) + " vertices");
  }
}

void CheckVertex(const MultiGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    Fail(ErrorCode::kInvalidArgument, "vertex " + std::to_string(v) + " out of range");
  }
}

// Fires `a` `times` times in place, recording the firings.
void FireInPlace(const MultiGraph& g, Divisor& d, VertexMask a,
                 std::int64_t times, std::vector<std::int64_t>& firings) {
  for (VertexMask rest = a; rest != 0; rest &= rest - 1) {
    const int u = Lowest(rest);
    firings[u] += times;
    for (int w : g.neighbors(u)) {
      if (Contains(a, w)) continue;
      const std::int64_t moved = times * g.multiplicity(u, w);
      d[u] = static_cast<int>(d[u] - moved);
      d[w] = static_cast<int>(d[w] + moved);
    }
  }
}

int EdgesInto(const MultiGraph& g, int u, VertexMask set) {
  int total = 0;
  for (int w : g.neighbors(u)) {
    if (Contains(set, w)) total += g.multiplicity(u, w);
  }
  return total;
}

}  // namespace

std::int64_t Degree(const Divisor& d) {
  return std::accumulate(d.begin(), d.end(), std::int64_t{0});
}

bool IsEffectiveAwayFrom(const Divisor& d, std::optional<int> exempt) {
  for (size_t v = 0; v < d.size(); ++v) {
    if (d[v] < 0 && (!exempt || static_cast<int>(v) != *exempt)) return false;
  }
  return true;
}

Divisor UnitDivisor(int vertex_count, int v) {
  Divisor d(vertex_count, 0);
  d.at(v) = 1;
  return d;
}

Divisor FireSet(const MultiGraph& g, const Divisor& d, VertexMask a) {
  CheckLength(g, d);
  Divisor out = d;
  std::vector<std::int64_t> unused(g.vertex_count(), 0);
  FireInPlace(g, out, a & g.all(), 1, unused);
  return out;
}

Divisor ApplyFirings(const MultiGraph& g, const Divisor& d,
                     const std::vector<std::int64_t>& firings) {
  CheckLength(g, d);
  Divisor out = d;
  for (int u = 0; u < g.vertex_count(); ++u) {
    std::int64_t delta = static_cast<std::int64_t>(g.degree(u)) * firings[u];
    for (int w : g.neighbors(u)) delta -= g.multiplicity(u, w) * firings[w];
    out[u] = static_cast<int>(out[u] - delta);
  }
  return out;
}

BurnReport DharBurn(const MultiGraph& g, const Divisor& d, int source) {
  CheckLength(g, d);
  CheckVertex(g, source);
  if (!IsEffectiveAwayFrom(d, source)) {
    Fail(ErrorCode::kPrecondition, "divisor is not effective away from the source");
  }
  const int n = g.vertex_count();
  std::vector<int> burning_edges(n, 0);
  std::vector<int> queue{source};
  queue.reserve(n);
  VertexMask burnt = Bit(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int b = queue[head];
    for (int w : g.neighbors(b)) {
      if (Contains(burnt, w)) continue;
      burning_edges[w] += g.multiplicity(b, w);
      if (burning_edges[w] > d[w]) {
        burnt |= Bit(w);
        queue.push_back(w);
      }
    }
  }
  return {burnt, g.all() & ~burnt, source};
}

ReductionResult Reduce(const MultiGraph& g, const Divisor& d, int v) {
  CheckLength(g, d);
  CheckVertex(g, v);
  const int n = g.vertex_count();
  ReductionResult result{d, std::vector<std::int64_t>(n, 0)};
  Divisor& cur = result.reduced;

  // Debt consolidation: pull chips outward by firing distance balls around v
  // until only v may be negative.
  const std::vector<int> dist = Distances(g, v);
  for (;;) {
    int target = -1;
    for (int u = 0; u < n; ++u) {
      if (u == v || cur[u] >= 0) continue;
      if (target < 0 || dist[u] > dist[target]) target = u;
    }
    if (target < 0) break;
    VertexMask ball = 0;
    for (int w = 0; w < n; ++w) {
      if (dist[w] < dist[target]) ball |= Bit(w);
    }
    const int inflow = EdgesInto(g, target, ball);
    const std::int64_t times = (-static_cast<std::int64_t>(cur[target]) + inflow - 1) / inflow;
    FireInPlace(g, cur, ball, times, result.firing_counts);
  }

  // Dhar loop: fire the unburnt set as often as it stays legal.
  for (;;) {
    const VertexMask unburnt = DharBurn(g, cur, v).unburnt;
    if (unburnt == 0) break;
    std::int64_t times = std::numeric_limits<std::int64_t>::max();
    for (VertexMask rest = unburnt; rest != 0; rest &= rest - 1) {
      const int u = Lowest(rest);
      const int out = EdgesInto(g, u, ~unburnt);
      if (out > 0) times = std::min<std::int64_t>(times, cur[u] / out);
    }
    FireInPlace(g, cur, unburnt, times, result.firing_counts);
  }

  const std::int64_t base = result.firing_counts[v];
  for (auto& x : result.firing_counts) x -= base;
  return result;
}

bool IsWinnable(const MultiGraph& g, const Divisor& d) {
  if (Degree(d) < 0) return false;
  return Reduce(g, d, 0).reduced[0] >= 0;
}

bool Equivalent(const MultiGraph& g, const Divisor& d1, const Divisor& d2) {
  CheckLength(g, d1);
  CheckLength(g, d2);
  if (Degree(d1) != Degree(d2)) return false;
  return Reduce(g, d1, 0).reduced == Reduce(g, d2, 0).reduced;
}

LineTotals PoorestLineStatistics(const MultiGraph& g, const Divisor& d) {
  CheckLength(g, d);
  if (g.dims().size() != 2) {
    Fail(ErrorCode::kInvalidArgument, "line statistics need a two dimensional host");
  }
  const int rows = g.dims()[0];
  const int cols = g.dims()[1];
  LineTotals totals{std::vector<std::int64_t>(rows, 0),
                    std::vector<std::int64_t>(cols, 0)};
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      totals.rows[r] += d[r * cols + c];
      totals.columns[c] += d[r * cols + c];
    }
  }
  return totals;
}

}  // namespace rookgon

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

#include "rookgon/graph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <string>
#include <utility>

#include "rookgon/error.hpp"

namespace rookgon {

namespace {

std::int64_t LatticeSize(const std::vector<int>& dims) {
  std::int64_t size = 1;
  for (int d : dims) {
    if (d < 1) Fail(ErrorCode::kInvalidSize, "label dimension must be >= 1");
    size *= d;
    if (size > kMaxVertices) return size;
  }
  return size;
}

}  // namespace

MultiGraph::MultiGraph(int vertex_count, std::vector<int> multiplicities,
                       std::vector<int> dims)
    : n_(vertex_count), mult_(std::move(multiplicities)), dims_(std::move(dims)) {
  if (n_ < 1) Fail(ErrorCode::kInvalidSize, "graph needs at least one vertex");
  if (n_ > kMaxVertices) {
    Fail(ErrorCode::kInvalidSize, "graph has " + std::to_string(n_) +
                                      " vertices; the limit is " +
                                      std::to_string(kMaxVertices));
  }
  if (mult_.size() != static_cast<size_t>(n_) * n_) {
    Fail(ErrorCode::kInvalidArgument, "multiplicity matrix has wrong size");
  }
  if (!dims_.empty() && LatticeSize(dims_) != n_) {
    Fail(ErrorCode::kInvalidArgument,
         "label dimensions do not multiply to the vertex count");
  }
  degree_.assign(n_, 0);
  adjacency_.assign(n_, {});
  neighbor_mask_.assign(n_, 0);
  for (int u = 0; u < n_; ++u) {
    if (multiplicity(u, u) != 0) {
      Fail(ErrorCode::kInvalidArgument,
           "loop at vertex " + std::to_string(u));
    }
    for (int v = 0; v < n_; ++v) {
      const int m = multiplicity(u, v);
      if (m < 0) Fail(ErrorCode::kInvalidArgument, "negative multiplicity");
      if (m != multiplicity(v, u)) {
        Fail(ErrorCode::kInvalidArgument, "multiplicity matrix not symmetric");
      }
      if (m > 0) {
        degree_[u] += m;
        adjacency_[u].push_back(v);
        neighbor_mask_[u] |= Bit(v);
        if (u < v) edge_count_ += m;
      }
    }
  }
  if (!IsConnectedSubset(*this, all())) {
    Fail(ErrorCode::kInvalidArgument, "graph is not connected");
  }
}

MultiGraph MultiGraph::FromEdges(int vertex_count, std::span<const Edge> edges,
                                 std::vector<int> dims) {
  if (vertex_count < 1 || vertex_count > kMaxVertices) {
    Fail(ErrorCode::kInvalidSize, "vertex count out of range");
  }
  std::vector<int> mult(static_cast<size_t>(vertex_count) * vertex_count, 0);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
      Fail(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      Fail(ErrorCode::kInvalidArgument, "loop at vertex " + std::to_string(e.u));
    }
    if (e.multiplicity < 0) {
      Fail(ErrorCode::kInvalidArgument, "negative multiplicity");
    }
    mult[e.u * vertex_count + e.v] += e.multiplicity;
    mult[e.v * vertex_count + e.u] += e.multiplicity;
  }
  return MultiGraph(vertex_count, std::move(mult), std::move(dims));
}

std::vector<int> MultiGraph::Coordinates(int v) const {
  std::vector<int> coords(dims_.size());
  for (size_t i = dims_.size(); i-- > 0;) {
    coords[i] = v % dims_[i];
    v /= dims_[i];
  }
  return coords;
}

int MultiGraph::VertexAt(std::span<const int> coordinates) const {
  if (coordinates.size() != dims_.size()) {
    Fail(ErrorCode::kInvalidArgument, "coordinate arity mismatch");
  }
  int v = 0;
  for (size_t i = 0; i < dims_.size(); ++i) {
    if (coordinates[i] < 0 || coordinates[i] >= dims_[i]) {
      Fail(ErrorCode::kInvalidArgument, "coordinate out of range");
    }
    v = v * dims_[i] + coordinates[i];
  }
  return v;
}

bool MultiGraph::IsRook() const {
  if (dims_.size() < 2) return false;
  for (int d : dims_) {
    if (d < 2) return false;
  }
  for (int u = 0; u < n_; ++u) {
    const std::vector<int> cu = Coordinates(u);
    for (int v = 0; v < n_; ++v) {
      const std::vector<int> cv = Coordinates(v);
      int differing = 0;
      for (size_t i = 0; i < cu.size(); ++i) differing += cu[i] != cv[i];
      if (multiplicity(u, v) != (differing == 1 ? 1 : 0)) return false;
    }
  }
  return true;
}

std::vector<Edge> MultiGraph::Edges() const {
  std::vector<Edge> edges;
  for (int u = 0; u < n_; ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) edges.push_back({u, v, multiplicity(u, v)});
    }
  }
  return edges;
}

MultiGraph CompleteGraph(int n) {
  if (n < 1) Fail(ErrorCode::kInvalidSize, "complete graph needs n >= 1");
  if (n > kMaxVertices) Fail(ErrorCode::kInvalidSize, "complete graph too large");
  std::vector<int> mult(static_cast<size_t>(n) * n, 1);
  for (int v = 0; v < n; ++v) mult[v * n + v] = 0;
  return MultiGraph(n, std::move(mult));
}

MultiGraph CartesianProduct(const MultiGraph& g, const MultiGraph& h) {
  const int a = g.vertex_count();
  const int b = h.vertex_count();
  if (static_cast<std::int64_t>(a) * b > kMaxVertices) {
    Fail(ErrorCode::kInvalidSize, "product exceeds the vertex limit");
  }
  const int n = a * b;
  std::vector<int> mult(static_cast<size_t>(n) * n, 0);
  for (int x1 = 0; x1 < a; ++x1) {
    for (int y1 = 0; y1 < b; ++y1) {
      const int p = x1 * b + y1;
      for (int y2 = 0; y2 < b; ++y2) {
        mult[p * n + (x1 * b + y2)] = h.multiplicity(y1, y2);
      }
      for (int x2 = 0; x2 < a; ++x2) {
        mult[p * n + (x2 * b + y1)] = g.multiplicity(x1, x2);
      }
    }
  }
  std::vector<int> dims = g.has_labels() ? g.dims() : std::vector<int>{a};
  if (h.has_labels()) {
    dims.insert(dims.end(), h.dims().begin(), h.dims().end());
  } else {
    dims.push_back(b);
  }
  return MultiGraph(n, std::move(mult), std::move(dims));
}

MultiGraph RookGraph(std::span<const int> dims) {
  if (dims.size() < 2) {
    Fail(ErrorCode::kInvalidSize, "rook graph needs at least two factors");
  }
  std::int64_t size = 1;
  for (int d : dims) {
    if (d < 2) Fail(ErrorCode::kInvalidSize, "rook factors must have size >= 2");
    size *= d;
    if (size > kMaxVertices) {
      Fail(ErrorCode::kInvalidSize, "rook graph exceeds the vertex limit");
    }
  }
  MultiGraph g = CartesianProduct(CompleteGraph(dims[0]), CompleteGraph(dims[1]));
  for (size_t i = 2; i < dims.size(); ++i) {
    g = CartesianProduct(g, CompleteGraph(dims[i]));
  }
  return g;
}

bool IsConnectedSubset(const MultiGraph& g, VertexMask s) {
  if (s == 0) return false;
  VertexMask seen = Bit(Lowest(s));
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f != 0; f &= f - 1) {
      next |= g.neighbor_mask(Lowest(f));
    }
    next &= s & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == s;
}

std::vector<VertexMask> InducedComponents(const MultiGraph& g, VertexMask s) {
  std::vector<VertexMask> components;
  while (s != 0) {
    VertexMask seen = Bit(Lowest(s));
    VertexMask frontier = seen;
    while (frontier != 0) {
      VertexMask next = 0;
      for (VertexMask f = frontier; f != 0; f &= f - 1) {
        next |= g.neighbor_mask(Lowest(f));
      }
      next &= s & ~seen;
      seen |= next;
      frontier = next;
    }
    components.push_back(seen);
    s &= ~seen;
  }
  return components;
}

std::int64_t CutWeight(const MultiGraph& g, VertexMask a) {
  a &= g.all();
  std::int64_t weight = 0;
  for (VertexMask rest = a; rest != 0; rest &= rest - 1) {
    const int u = Lowest(rest);
    for (int v : g.neighbors(u)) {
      if (!Contains(a, v)) weight += g.multiplicity(u, v);
    }
  }
  return weight;
}

std::vector<int> Distances(const MultiGraph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push(v);
      }
    }
  }
  return dist;
}

namespace {

// Dinic's algorithm on the residual network of g with s contracted into a
// super source and t into a super sink.
class Dinic {
 public:
  Dinic(const MultiGraph& g, VertexMask s, VertexMask t)
      : n_(g.vertex_count() + 2),
        source_(g.vertex_count()),
        sink_(g.vertex_count() + 1),
        head_(n_, -1),
        level_(n_),
        cursor_(n_) {
    constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
    for (const Edge& e : g.Edges()) AddArcPair(e.u, e.v, e.multiplicity, e.multiplicity);
    for (VertexMask m = s; m != 0; m &= m - 1) AddArcPair(source_, Lowest(m), kInf, 0);
    for (VertexMask m = t; m != 0; m &= m - 1) AddArcPair(Lowest(m), sink_, kInf, 0);
  }

  std::int64_t Run(std::int64_t limit) {
    std::int64_t flow = 0;
    while (flow < limit && BuildLevels()) {
      std::copy(head_.begin(), head_.end(), cursor_.begin());
      while (flow < limit) {
        const std::int64_t pushed = Augment(source_, limit - flow);
        if (pushed == 0) break;
        flow += pushed;
      }
    }
    return flow;
  }

  VertexList SourceSide() const {
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{source_};
    seen[source_] = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int a = head_[u]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && !seen[to_[a]]) {
          seen[to_[a]] = 1;
          stack.push_back(to_[a]);
        }
      }
    }
    VertexList side;
    for (int v = 0; v < source_; ++v) {
      if (seen[v]) side.push_back(v);
    }
    return side;
  }

 private:
  void AddArcPair(int u, int v, std::int64_t forward, std::int64_t backward) {
    to_.push_back(v);
    cap_.push_back(forward);
    next_.push_back(head_[u]);
    head_[u] = static_cast<int>(to_.size()) - 1;
    to_.push_back(u);
    cap_.push_back(backward);
    next_.push_back(head_[v]);
    head_[v] = static_cast<int>(to_.size()) - 1;
  }

  bool BuildLevels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[source_] = 0;
    queue.push(source_);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int a = head_[u]; a >= 0; a = next_[a]) {
        if (cap_[a] > 0 && level_[to_[a]] < 0) {
          level_[to_[a]] = level_[u] + 1;
          queue.push(to_[a]);
        }
      }
    }
    return level_[sink_] >= 0;
  }

  std::int64_t Augment(int u, std::int64_t budget) {
    if (u == sink_) return budget;
    for (int& a = cursor_[u]; a >= 0; a = next_[a]) {
      const int v = to_[a];
      if (cap_[a] <= 0 || level_[v] != level_[u] + 1) continue;
      const std::int64_t pushed = Augment(v, std::min(budget, cap_[a]));
      if (pushed > 0) {
        cap_[a] -= pushed;
        cap_[a ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int n_;
  int source_;
  int sink_;
  std::vector<int> head_;
  std::vector<int> next_;
  std::vector<int> to_;
  std::vector<std::int64_t> cap_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

void CheckTerminals(const MultiGraph& g, VertexMask s, VertexMask t) {
  if ((s | t) & ~g.all()) {
    Fail(ErrorCode::kInvalidArgument, "terminal vertex out of range");
  }
  if (s == 0 || t == 0) {
    Fail(ErrorCode::kInvalidArgument, "terminal sets must be nonempty");
  }
  if (s & t) Fail(ErrorCode::kInvalidArgument, "terminal sets must be disjoint");
}

}  // namespace

FlowResult MinCutBetween(const MultiGraph& g, VertexMask s, VertexMask t) {
  CheckTerminals(g, s, t);
  Dinic dinic(g, s, t);
  FlowResult result;
  result.value = dinic.Run(std::numeric_limits<std::int64_t>::max());
  result.source_side = dinic.SourceSide();
  return result;
}

std::optional<FlowResult> MinCutBelow(const MultiGraph& g, VertexMask s,
                                      VertexMask t, std::int64_t limit) {
  CheckTerminals(g, s, t);
  Dinic dinic(g, s, t);
  const std::int64_t flow = dinic.Run(limit);
  if (flow >= limit) return std::nullopt;
  return FlowResult{flow, dinic.SourceSide()};
}

namespace {

struct SubsetGrower {
  const MultiGraph& g;
  int k;
  const std::function<void(VertexMask)>& visit;
  VertexMask above_anchor = 0;

  void Extend(VertexMask sub, VertexMask ext, VertexMask closed, int size) {
    if (size == k) {
      visit(sub);
      return;
    }
    while (ext != 0) {
      const int w = Lowest(ext);
      ext &= ext - 1;
      const VertexMask fresh = g.neighbor_mask(w) & ~closed & above_anchor;
      Extend(sub | Bit(w), ext | fresh, closed | Bit(w) | g.neighbor_mask(w),
             size + 1);
    }
  }
};

}  // namespace

void ForEachConnectedSubset(const MultiGraph& g, int k,
                            const std::function<void(VertexMask)>& visit) {
  const int n = g.vertex_count();
  if (k < 1 || k > n) {
    Fail(ErrorCode::kInvalidArgument, "subset size must lie in [1, |V|]");
  }
  SubsetGrower grower{g, k, visit};
  for (int anchor = 0; anchor < n; ++anchor) {
    grower.above_anchor = g.all() & ~AllVertices(anchor + 1);
    const VertexMask nbrs = g.neighbor_mask(anchor);
    grower.Extend(Bit(anchor), nbrs & grower.above_anchor, Bit(anchor) | nbrs, 1);
  }
}

std::vector<VertexMask> ConnectedSubsets(const MultiGraph& g, int k) {
  std::vector<VertexMask> out;
  ForEachConnectedSubset(g, k, [&](VertexMask m) { out.push_back(m); });
  return out;
}

}  // namespace rookgon

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

#ifndef ROOKGON_GRAPH_HPP_
#define ROOKGON_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rookgon/vertex_set.hpp"

namespace rookgon {

struct Edge {
  int u;
  int v;
  int multiplicity;

  bool operator==(const Edge&) const = default;
};

// Loopless, connected, undirected multigraph on at most kMaxVertices vertices,
// stored as a dense symmetric multiplicity matrix. Immutable once built.
//
// When `dims` is non-empty the vertices are labelled by coordinate tuples of
// the lattice dims[0] x ... x dims[k-1], enumerated row-major (last
// coordinate fastest).
class MultiGraph {
 public:
  // Validates symmetry, the zero diagonal, non-negativity, connectivity and
  // the label lattice size. Throws Error on violation.
  MultiGraph(int vertex_count, std::vector<int> multiplicity,
             std::vector<int> dims = {});

  static MultiGraph FromEdges(int vertex_count, std::span<const Edge> edges,
                              std::vector<int> dims = {});

  int vertex_count() const { return n_; }
  int multiplicity(int u, int v) const { return mult_[u * n_ + v]; }
  int degree(int v) const { return degree_[v]; }
  // Distinct neighbours of v, ascending.
  std::span<const int> neighbors(int v) const { return adjacency_[v]; }
  VertexMask neighbor_mask(int v) const { return neighbor_mask_[v]; }
  VertexMask all() const { return AllVertices(n_); }

  // Number of edges counted with multiplicity.
  std::int64_t edge_count() const { return edge_count_; }
  // First Betti number |E| - |V| + 1.
  std::int64_t genus() const { return edge_count_ - n_ + 1; }

  const std::vector<int>& dims() const { return dims_; }
  bool has_labels() const { return !dims_.empty(); }
  std::vector<int> Coordinates(int v) const;
  int VertexAt(std::span<const int> coordinates) const;

  // True when the graph carries labels and equals the rook graph on them.
  bool IsRook() const;

  std::vector<Edge> Edges() const;

  bool operator==(const MultiGraph& other) const {
    return n_ == other.n_ && mult_ == other.mult_ && dims_ == other.dims_;
  }

 private:
  int n_;
  std::vector<int> mult_;
  std::vector<int> dims_;
  std::vector<int> degree_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<VertexMask> neighbor_mask_;
  std::int64_t edge_count_ = 0;
};

struct Cut {
  VertexList side_a;
  VertexList side_b;
};

struct FlowResult {
  std::int64_t value = 0;
  VertexList source_side;
};

MultiGraph CompleteGraph(int n);
MultiGraph CartesianProduct(const MultiGraph& g, const MultiGraph& h);
MultiGraph RookGraph(std::span<const int> dims);

// True iff `s` is nonempty and induces a connected subgraph.
bool IsConnectedSubset(const MultiGraph& g, VertexMask s);

// Total multiplicity of edges with exactly one end in `a`.
std::int64_t CutWeight(const MultiGraph& g, VertexMask a);

// Number of connected components of the subgraph induced by `s`, with sizes.
std::vector<VertexMask> InducedComponents(const MultiGraph& g, VertexMask s);

// BFS distances from `source`.
std::vector<int> Distances(const MultiGraph& g, int source);

// Minimum cut separating s from t, one unit of capacity per parallel edge.
// The returned source side is the set reachable from s in the residual
// network, i.e. the inclusion-minimal minimizer.
FlowResult MinCutBetween(const MultiGraph& g, VertexMask s, VertexMask t);

// As above, but stops augmenting once the flow reaches `limit`. Returns
// nullopt if the minimum cut is >= limit.
std::optional<FlowResult> MinCutBelow(const MultiGraph& g, VertexMask s,
                                      VertexMask t, std::int64_t limit);

// Streams every connected k-subset exactly once. Each set is generated from
// its smallest member by extension-set growth, so nothing is materialized.
void ForEachConnectedSubset(const MultiGraph& g, int k,
                            const std::function<void(VertexMask)>& visit);
std::vector<VertexMask> ConnectedSubsets(const MultiGraph& g, int k);

}  // namespace rookgon

#endif  // ROOKGON_GRAPH_HPP_

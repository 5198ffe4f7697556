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

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rookgon/error.hpp"
#include "rookgon/graph.hpp"

using namespace rookgon;

namespace {

MultiGraph Cycle4() {
  const Edge edges[] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  return MultiGraph::FromEdges(4, edges);
}

MultiGraph Rook(std::initializer_list<int> dims) {
  return RookGraph(std::vector<int>(dims));
}

}  // namespace

TEST_CASE("complete graphs") {
  CHECK(CompleteGraph(1).vertex_count() == 1);
  CHECK(CompleteGraph(1).edge_count() == 0);
  CHECK(CompleteGraph(3).edge_count() == 3);
  const MultiGraph k5 = CompleteGraph(5);
  CHECK(k5.edge_count() == 10);
  for (int v = 0; v < 5; ++v) CHECK(k5.degree(v) == 4);
  CHECK_THROWS_AS(CompleteGraph(0), Error);
}

TEST_CASE("products and rook graphs") {
  const MultiGraph c4 = CartesianProduct(CompleteGraph(2), CompleteGraph(2));
  CHECK(c4.edge_count() == 4);
  CHECK(c4.genus() == 1);

  struct Case {
    std::vector<int> dims;
    int vertices, degree;
  };
  for (const Case& c : {Case{{2, 3}, 6, 3}, Case{{3, 3}, 9, 4}, Case{{4, 4}, 16, 6},
                        Case{{2, 2, 2}, 8, 3}, Case{{3, 3, 3}, 27, 6}}) {
    const MultiGraph g = RookGraph(c.dims);
    CHECK(g.vertex_count() == c.vertices);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(g.degree(v) == c.degree);
    CHECK(g.edge_count() == c.vertices * c.degree / 2);
    CHECK(g.IsRook());
  }
  CHECK(CartesianProduct(CompleteGraph(2), CompleteGraph(3)) == Rook({2, 3}));

  // row-major labels: adjacency iff exactly one coordinate differs
  const MultiGraph g = Rook({2, 3, 4});
  for (int u = 0; u < g.vertex_count(); ++u) {
    CHECK(g.VertexAt(g.Coordinates(u)) == u);
    for (int v = 0; v < g.vertex_count(); ++v) {
      const std::vector<int> a = g.Coordinates(u), b = g.Coordinates(v);
      int differ = 0;
      for (size_t i = 0; i < a.size(); ++i) differ += a[i] != b[i];
      CHECK(g.multiplicity(u, v) == (differ == 1 ? 1 : 0));
    }
  }

  CHECK_THROWS_AS(RookGraph(std::vector<int>{4}), Error);
  CHECK_THROWS_AS(RookGraph(std::vector<int>{1, 3}), Error);
  CHECK_THROWS_AS(RookGraph(std::vector<int>{8, 9}), Error);  // 72 > 64 vertices
}

TEST_CASE("multigraph validation") {
  CHECK_THROWS_AS(MultiGraph(2, {1, 1, 1, 0}), Error);  // loop
  CHECK_THROWS_AS(MultiGraph(2, {0, 1, 2, 0}), Error);  // asymmetric
  CHECK_THROWS_AS(MultiGraph(3, {0, 1, 0, 1, 0, 0, 0, 0, 0}), Error);  // disconnected
  CHECK_THROWS_AS(MultiGraph(2, {0, -1, -1, 0}), Error);
  const MultiGraph doubled(2, {0, 3, 3, 0});
  CHECK(doubled.degree(0) == 3);
  CHECK(doubled.genus() == 2);
}

TEST_CASE("connected subsets against brute force") {
  const MultiGraph c4 = Cycle4();
  CHECK_FALSE(IsConnectedSubset(c4, Bit(0) | Bit(2)));
  CHECK(IsConnectedSubset(c4, Bit(0)));
  CHECK(ConnectedSubsets(CompleteGraph(3), 2).size() == 3);
  CHECK(ConnectedSubsets(c4, 3).size() == 4);

  // a maximal avoidance set for connected 3-sets on the 4x4 lattice: three pieces
  const MultiGraph g44 = Rook({4, 4});
  const VertexMask avoid = ToMask(VertexList{3, 7, 10, 12, 13});
  CHECK_FALSE(IsConnectedSubset(g44, avoid));
  CHECK(InducedComponents(g44, avoid).size() == 3);

  for (const MultiGraph& g : {Rook({4, 4}), Rook({2, 3}), Rook({2, 2, 3}), Cycle4()}) {
    const int n = g.vertex_count();
    for (int k = 1; k <= std::min(n, 4); ++k) {
      std::set<VertexMask> expected;
      for (oracle::Mask m = 1; m < (oracle::Mask{1} << n); ++m) {
        if (oracle::Popcount(m) == k && oracle::Connected(g, m)) expected.insert(m);
      }
      const std::vector<VertexMask> got = ConnectedSubsets(g, k);
      CHECK(got.size() == expected.size());
      CHECK(std::set<VertexMask>(got.begin(), got.end()) == expected);
    }
  }
  std::int64_t count = 0;
  ForEachConnectedSubset(Rook({4, 4}), 3, [&](VertexMask) { ++count; });
  int brute = 0;
  for (oracle::Mask m = 1; m < (1u << 16); ++m) {
    brute += oracle::Popcount(m) == 3 && oracle::Connected(Rook({4, 4}), m);
  }
  CHECK(count == brute);
}

TEST_CASE("cut weights") {
  const MultiGraph g33 = Rook({3, 3});
  CHECK(CutWeight(g33, 0) == 0);
  CHECK(CutWeight(g33, g33.all()) == 0);
  CHECK(CutWeight(g33, ToMask(VertexList{0, 3, 6})) == 6);  // one column
  const MultiGraph g44 = Rook({4, 4});
  CHECK(CutWeight(g44, ToMask(VertexList{0, 1, 2, 3})) == 12);  // one row
  for (oracle::Mask a = 0; a < (1u << 9); a += 7) {
    CHECK(CutWeight(g33, a) == oracle::BruteCutWeight(g33, a));
  }
  const MultiGraph multi(3, {0, 2, 1, 2, 0, 3, 1, 3, 0});
  for (oracle::Mask a = 0; a < 8; ++a) CHECK(CutWeight(multi, a) == oracle::BruteCutWeight(multi, a));
}

TEST_CASE("minimum cuts between vertex sets") {
  for (int m = 2; m <= 5; ++m) {
    const MultiGraph g = Rook({2, m});
    for (int s = 0; s < g.vertex_count(); ++s) {
      for (int t = s + 1; t < g.vertex_count(); ++t) {
        CHECK(MinCutBetween(g, Bit(s), Bit(t)).value == m);
      }
    }
  }
  CHECK(MinCutBetween(Cycle4(), Bit(0), Bit(2)).value == 2);
  CHECK_THROWS_AS(MinCutBetween(Cycle4(), Bit(0) | Bit(1), Bit(1)), Error);

  const MultiGraph g44 = Rook({4, 4});
  const VertexMask s = ToMask(VertexList{0, 1, 2});
  const VertexMask t = ToMask(VertexList{5, 6, 7});
  const FlowResult r = MinCutBetween(g44, s, t);
  CHECK(r.value >= 12);
  CHECK(r.value == oracle::MinSeparatingCut(g44, s, t));
  CHECK(CutWeight(g44, ToMask(r.source_side)) == r.value);
  CHECK((ToMask(r.source_side) & s) == s);

  // the source side is the minimal one
  for (oracle::Mask a = 0; a < (1u << 16); ++a) {
    if ((a & s) == s && (a & t) == 0 && oracle::BruteCutWeight(g44, a) == r.value) {
      CHECK((ToMask(r.source_side) & ~a) == 0);
    }
  }

  CHECK_FALSE(MinCutBelow(g44, s, t, r.value).has_value());
  REQUIRE(MinCutBelow(g44, s, t, r.value + 1).has_value());
  CHECK(MinCutBelow(g44, s, t, r.value + 1)->value == r.value);

  const MultiGraph multi(4, {0, 2, 0, 1, 2, 0, 3, 0, 0, 3, 0, 2, 1, 0, 2, 0});
  for (oracle::Mask a = 1; a < 16; ++a) {
    for (oracle::Mask b = 1; b < 16; ++b) {
      if (a & b) continue;
      CHECK(MinCutBetween(multi, a, b).value == oracle::MinSeparatingCut(multi, a, b));
    }
  }
}

TEST_CASE("distances") {
  const std::vector<int> d = Distances(Rook({3, 3}), 0);
  CHECK(d[0] == 0);
  CHECK(d[1] == 1);
  CHECK(d[4] == 2);
  CHECK(*std::max_element(d.begin(), d.end()) == 2);
}

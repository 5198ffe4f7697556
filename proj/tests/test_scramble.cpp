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

#include <memory>

#include "doctest.h"
#include "oracles.hpp"
#include "rookgon/error.hpp"
#include "rookgon/families.hpp"
#include "rookgon/scramble.hpp"

using namespace rookgon;

namespace {

std::shared_ptr<const MultiGraph> Path3() {
  const Edge edges[] = {{0, 1, 1}, {1, 2, 1}};
  return std::make_shared<const MultiGraph>(MultiGraph::FromEdges(3, edges));
}

std::shared_ptr<const MultiGraph> Rook(std::vector<int> dims) {
  return std::make_shared<const MultiGraph>(RookGraph(dims));
}

// Checks every reported quantity against exhaustive enumeration.
void CheckAgainstBruteForce(const Scramble& s) {
  const MultiGraph& g = s.host();
  const int n = g.vertex_count();
  const OrderReport r = ScrambleOrder(s);
  CHECK(r.hitting_number == oracle::HittingNumber(n, s.eggs()));
  CHECK(r.min_egg_cut == oracle::MinEggCut(g, s.eggs()));
  const std::int64_t expected_order =
      r.min_egg_cut ? std::min<std::int64_t>(r.hitting_number, *r.min_egg_cut) : r.hitting_number;
  CHECK(r.order == expected_order);

  // complementarity
  CHECK(static_cast<int>(r.max_avoidance.size()) + r.hitting_number == n);
  const VertexMask avoid = ToMask(r.max_avoidance);
  for (VertexMask egg : s.eggs()) {
    CHECK((egg & ~avoid) != 0);
    CHECK((egg & (g.all() & ~avoid)) != 0);
  }
  // the cut witness is a real egg cut of the stated weight
  if (r.cut_witness) {
    const CutWitness& w = *r.cut_witness;
    const VertexMask a = ToMask(w.side_a);
    CHECK((a & ToMask(w.side_b)) == 0);
    CHECK((a | ToMask(w.side_b)) == g.all());
    CHECK((ToMask(w.egg_a) & ~a) == 0);
    CHECK((ToMask(w.egg_b) & a) == 0);
    CHECK(CutWeight(g, a) == w.weight);
    CHECK(w.weight == *r.min_egg_cut);
  }
}

}  // namespace

TEST_CASE("eggs are deduplicated and sorted") {
  const Scramble s(Path3(), std::vector<VertexList>{{2}, {0, 1}, {1, 0}, {0}});
  CHECK(s.EggLists() == std::vector<VertexList>{{0}, {0, 1}, {2}});
  const Scramble t(Path3(), std::vector<VertexList>{{0}, {2}, {0, 1}});
  CHECK(s == t);
  CHECK(s.Digest() == t.Digest());
  CHECK(s.Digest().size() == 64);
  CHECK_THROWS_AS(Scramble(Path3(), std::vector<VertexList>{{3}}), Error);
}

TEST_CASE("validation") {
  CHECK(ValidateScramble(Scramble(Path3(), std::vector<VertexList>{{0}, {0, 1}, {2}})).empty());
  const std::vector<EggViolation> bad =
      ValidateScramble(Scramble(Path3(), std::vector<VertexList>{{0, 2}}));
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == EggViolation::Kind::kDisconnected);
  const Scramble empty(Path3(), std::vector<VertexMask>{0});
  REQUIRE(ValidateScramble(empty).size() == 1);
  CHECK(ValidateScramble(empty)[0].kind == EggViolation::Kind::kEmpty);
  CHECK_THROWS_AS(HittingNumber(empty), Error);
}

TEST_CASE("three-egg example on a path") {
  const Scramble s(Path3(), std::vector<VertexList>{{0}, {0, 1}, {2}});
  const HittingResult h = HittingNumber(s);
  CHECK(h.hitting_number == 2);
  CHECK(h.hitting_set == VertexList{0, 2});
  const EggCutResult cut = MinEggCut(s);
  CHECK(cut.value == 1);
  REQUIRE(cut.witness.has_value());
  CHECK(cut.witness->side_a == VertexList{0});  // minimal source side
  CheckAgainstBruteForce(s);
}

TEST_CASE("no disjoint eggs means the order is the hitting number") {
  const Scramble s(Rook({2, 3}), std::vector<VertexList>{{0, 1}, {0, 3}, {0}});
  const OrderReport r = ScrambleOrder(s);
  CHECK_FALSE(r.min_egg_cut.has_value());
  CHECK(r.order == r.hitting_number);
  CHECK(r.hitting_number == 1);
}

TEST_CASE("exact on small hosts") {
  for (const std::vector<int>& dims :
       {std::vector<int>{2, 3}, {2, 4}, {3, 3}, {3, 4}, {2, 2, 2}, {2, 7}, {2, 2, 3}}) {
    const int n = RookGraph(dims).vertex_count();
    for (int k = 1; k <= 4 && k < n; ++k) {
      CAPTURE(k);
      CheckAgainstBruteForce(UniformScramble(Rook(dims), k));
    }
  }
  CheckAgainstBruteForce(StarScramble(3, 4));
  CheckAgainstBruteForce(SquareAugmentedStarScramble(3, 4));
  // an irregular scramble
  CheckAgainstBruteForce(Scramble(Rook({3, 4}), std::vector<VertexList>{
                                                    {0, 1, 2}, {5}, {6, 7}, {3, 7, 11}, {8, 9}}));
}

TEST_CASE("star and uniform scrambles on small rook graphs") {
  const OrderReport s44 = ScrambleOrder(StarScramble(4, 4));
  CHECK(s44.hitting_number == 11);
  CHECK(s44.max_avoidance.size() == 5);
  CHECK(s44.min_egg_cut == 12);
  CHECK(s44.order == 11);
  for (int m = 2; m <= 4; ++m) {
    CHECK(ScrambleOrder(UniformScramble(Rook({2, m}), 1)).order == m);
    CHECK(MinEggCut(UniformScramble(Rook({2, m}), 1)).value == m);
    CHECK(ScrambleOrder(UniformScramble(Rook({3, m + 1}), 2)).order == 2 * (m + 1));
  }
  CHECK(ScrambleOrder(UniformScramble(Rook({2, 2, 2}), 2)).order == 4);
  CHECK(HittingNumber(StarScramble(4, 6)).hitting_number == 18);
  CHECK(HittingNumber(StarScramble(3, 3)).hitting_number == 6);
  // for n = 3 the eggs are edges: hitting sets are vertex covers, 12 - 3 = 9,
  // above (n-1)m = 8, which the egg cut attains
  const OrderReport s34 = ScrambleOrder(StarScramble(3, 4));
  CHECK(s34.hitting_number == 9);
  CHECK(s34.min_egg_cut == 8);
  CHECK(s34.order == 8);
}

TEST_CASE("thread count does not change cut witnesses") {
  const Scramble s = StarScramble(4, 4);
  const EggCutResult one = MinEggCut(s, 1);
  CHECK(one.used_symmetry);
  for (int threads : {2, 3, 8}) {
    const EggCutResult many = MinEggCut(s, threads);
    CHECK(many.value == one.value);
    REQUIRE(many.witness.has_value());
    CHECK(many.witness->egg_a == one.witness->egg_a);
    CHECK(many.witness->egg_b == one.witness->egg_b);
    CHECK(many.witness->side_a == one.witness->side_a);
  }
}

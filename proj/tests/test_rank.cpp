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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rookgon/divisor.hpp"
#include "rookgon/error.hpp"
#include "rookgon/gonality.hpp"
#include "rookgon/rank.hpp"

using namespace rookgon;

namespace {

// rank by definition: largest r with D - E winnable for every effective E
// of degree r.
int DefinitionalRank(const MultiGraph& g, const Divisor& d) {
  if (!IsWinnable(g, d)) return -1;
  for (int r = 1;; ++r) {
    for (const std::vector<int>& e : oracle::EffectiveDivisors(g.vertex_count(), r)) {
      Divisor rest = d;
      for (size_t v = 0; v < rest.size(); ++v) rest[v] -= e[v];
      if (!IsWinnable(g, rest)) return r - 1;
    }
  }
}

MultiGraph Cycle4() {
  const Edge edges[] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  return MultiGraph::FromEdges(4, edges);
}

}  // namespace

TEST_CASE("rank examples") {
  const MultiGraph c4 = Cycle4();
  CHECK(Rank(c4, {1, 1, 1, 1}) == 3);
  CHECK(Rank(c4, {-1, 0, 0, 0}) == -1);
  const std::vector<int> dims{3, 3};
  const MultiGraph g33 = RookGraph(dims);
  const Divisor cert = RookCertificateDivisor(dims, 1);
  CHECK(Degree(cert) == 6);
  CHECK(Rank(g33, cert) == 1);
  CHECK(DefinitionalRank(g33, cert) == 1);
}

TEST_CASE("rank agrees with the definition") {
  std::mt19937_64 rng(3);
  const std::vector<MultiGraph> graphs = {CompleteGraph(3), Cycle4(),
                                          RookGraph(std::vector<int>{2, 3}),
                                          MultiGraph(3, {0, 2, 1, 2, 0, 1, 1, 1, 0})};
  std::uniform_int_distribution<int> chips(-1, 2);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph& g = graphs[trial % graphs.size()];
    Divisor d(g.vertex_count());
    for (int& c : d) c = chips(rng);
    if (Degree(d) > 6) continue;
    CHECK(Rank(g, d) == DefinitionalRank(g, d));
  }
}

TEST_CASE("Riemann-Roch on small graphs") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> chips(-2, 2);
  const std::vector<MultiGraph> graphs = {RookGraph(std::vector<int>{2, 2}),
                                          RookGraph(std::vector<int>{2, 3}), CompleteGraph(4),
                                          MultiGraph(3, {0, 2, 1, 2, 0, 1, 1, 1, 0})};
  for (int trial = 0; trial < 40; ++trial) {
    const MultiGraph& g = graphs[trial % graphs.size()];
    const int n = g.vertex_count();
    Divisor d(n), canonical_minus_d(n);
    for (int& c : d) c = chips(rng);
    for (int v = 0; v < n; ++v) canonical_minus_d[v] = g.degree(v) - 2 - d[v];
    CHECK(Rank(g, d) - Rank(g, canonical_minus_d) == Degree(d) + 1 - g.genus());
  }
}

TEST_CASE("verify rank at least") {
  const MultiGraph c4 = Cycle4();
  CHECK(VerifyRankAtLeast(c4, {0, 0, 0, 0}, 0).holds);
  const std::vector<int> d44{4, 4};
  CHECK(VerifyRankAtLeast(RookGraph(d44), RookCertificateDivisor(d44, 1), 1).holds);
  CHECK(VerifyRankAtLeast(RookGraph(d44), RookCertificateDivisor(d44, 3), 3).holds);
  const std::vector<int> d33{3, 3};
  CHECK(VerifyRankAtLeast(RookGraph(d33), Divisor(9, 1), 2).holds);

  // a failed check names chips whose removal is not winnable
  const MultiGraph g = RookGraph(d33);
  const Divisor d = RookCertificateDivisor(d33, 1);
  const RankCheck check = VerifyRankAtLeast(g, d, 2);
  REQUIRE_FALSE(check.holds);
  REQUIRE(check.counterexample.has_value());
  CHECK(IsEffective(*check.counterexample));
  CHECK(Degree(*check.counterexample) == 2);
  Divisor rest = d;
  for (int v = 0; v < 9; ++v) rest[v] -= (*check.counterexample)[v];
  CHECK_FALSE(IsWinnable(g, rest));
  CHECK_THROWS_AS(VerifyRankAtLeast(g, d, -1), Error);
}

TEST_CASE("reduced divisors without a chip at the base have rank below one") {
  std::mt19937_64 rng(5);
  const MultiGraph g = RookGraph(std::vector<int>{2, 3});
  std::uniform_int_distribution<int> chips(-1, 3);
  for (int trial = 0; trial < 30; ++trial) {
    Divisor d(6);
    for (int& c : d) c = chips(rng);
    const int v = static_cast<int>(rng() % 6);
    Divisor q = Reduce(g, d, v).reduced;
    q[v] = std::min(q[v], 0);
    const RankCheck check = VerifyRankAtLeast(g, q, 1);
    CHECK_FALSE(check.holds);
    // stealing the chip at the base vertex is always a witness
    Divisor robbed = q;
    --robbed[v];
    CHECK_FALSE(IsWinnable(g, robbed));
    REQUIRE(check.counterexample.has_value());
    CHECK(Degree(*check.counterexample) == 1);
  }
}

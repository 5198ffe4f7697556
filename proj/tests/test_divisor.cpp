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

using namespace rookgon;

namespace {

MultiGraph Cycle4() {
  const Edge edges[] = {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {0, 3, 1}};
  return MultiGraph::FromEdges(4, edges);
}

// The unique v-reduced divisor in the box of firings around d.
std::vector<Divisor> ReducedInBox(const MultiGraph& g, const Divisor& d, int v, int bound) {
  std::vector<Divisor> found;
  oracle::ForEachFiring(g.vertex_count(), bound, v, [&](const std::vector<int>& x) {
    const Divisor e = oracle::Fire(g, d, x);
    if (oracle::IsReduced(g, e, v) &&
        std::find(found.begin(), found.end(), e) == found.end()) {
      found.push_back(e);
    }
  });
  return found;
}

}  // namespace

TEST_CASE("firing sets") {
  const MultiGraph k3 = CompleteGraph(3);
  CHECK(FireSet(k3, {2, 0, 0}, Bit(0)) == Divisor{0, 1, 1});
  CHECK(FireSet(k3, {2, 0, 0}, k3.all()) == Divisor{2, 0, 0});
  const MultiGraph c4 = Cycle4();
  const Divisor d{2, 0, 0, 0};
  // v0 and v1 each lose the chip on their edge leaving the set
  const Divisor fired = FireSet(c4, d, Bit(0) | Bit(1));
  CHECK(fired == Divisor{1, -1, 1, 1});
  CHECK(FireSet(c4, fired, Bit(2) | Bit(3)) == d);
}

TEST_CASE("effectiveness") {
  CHECK(IsEffectiveAwayFrom({0, 0, 0}, std::nullopt));
  CHECK(IsEffectiveAwayFrom({-3, 1, 1}, 0));
  CHECK_FALSE(IsEffectiveAwayFrom({-1, -1, 5}, 0));
  CHECK(Degree({-1, -1, 5}) == 3);
}

TEST_CASE("burning") {
  const MultiGraph k3 = CompleteGraph(3);
  CHECK(DharBurn(k3, {0, 1, 0}, 0).unburnt == 0);
  CHECK(DharBurn(k3, {0, 1, 1}, 0).unburnt == (Bit(1) | Bit(2)));
  const MultiGraph g = RookGraph(std::vector<int>{3, 3});
  for (int v = 0; v < 9; ++v) CHECK(DharBurn(g, Divisor(9, 0), v).burnt == g.all());
  CHECK_THROWS_AS(DharBurn(k3, {0, -1, 0}, 0), Error);
}

TEST_CASE("reduction on the 4-cycle matches the bounded firing search") {
  const MultiGraph c4 = Cycle4();
  const Divisor d{2, 0, 0, 0};
  const ReductionResult r = Reduce(c4, d, 2);
  CHECK(Degree(r.reduced) == 2);
  CHECK(IsEffectiveAwayFrom(r.reduced, 2));
  const std::vector<Divisor> brute = ReducedInBox(c4, d, 2, 4);
  REQUIRE(brute.size() == 1);
  CHECK(r.reduced == brute.front());
  CHECK(ApplyFirings(c4, d, r.firing_counts) == r.reduced);
}

TEST_CASE("reduction against the definition") {
  std::mt19937_64 rng(0);
  const std::vector<MultiGraph> graphs = {Cycle4(), CompleteGraph(4),
                                          RookGraph(std::vector<int>{2, 3}),
                                          MultiGraph(3, {0, 2, 1, 2, 0, 3, 1, 3, 0})};
  std::uniform_int_distribution<int> chips(-3, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiGraph& g = graphs[trial % graphs.size()];
    const int n = g.vertex_count();
    Divisor d(n);
    for (int& c : d) c = chips(rng);
    const int v = static_cast<int>(rng() % n);
    const ReductionResult r = Reduce(g, d, v);
    CHECK(oracle::IsReduced(g, r.reduced, v));
    CHECK(ApplyFirings(g, d, r.firing_counts) == r.reduced);
    CHECK(r.firing_counts[v] == 0);
    // idempotent
    const ReductionResult again = Reduce(g, r.reduced, v);
    CHECK(again.reduced == r.reduced);
    CHECK(std::all_of(again.firing_counts.begin(), again.firing_counts.end(),
                      [](std::int64_t x) { return x == 0; }));
  }
}

TEST_CASE("certificate reduces to a positive base vertex") {
  const std::vector<int> dims{4, 4};
  const MultiGraph g = RookGraph(dims);
  const Divisor cert = RookCertificateDivisor(dims, 1);
  for (int v = 0; v < 16; ++v) {
    if (cert[v] == 0) CHECK(Reduce(g, cert, v).reduced[v] >= 1);
  }
}

TEST_CASE("winnability against a firing box") {
  const MultiGraph k3 = CompleteGraph(3);
  CHECK(IsWinnable(k3, {-1, 0, 2}));
  CHECK(FireSet(k3, {-1, 0, 2}, Bit(2)) == Divisor{0, 1, 0});
  CHECK_FALSE(IsWinnable(k3, {-1, 0, 0}));
  CHECK(IsWinnable(k3, {0, 0, 0}));

  const MultiGraph c4 = Cycle4();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> chips(-1, 2);
  for (int trial = 0; trial < 40; ++trial) {
    Divisor d(4);
    for (int& c : d) c = chips(rng);
    CHECK(IsWinnable(c4, d) == oracle::WinnableInBox(c4, d, 3));
  }
}

TEST_CASE("equivalence") {
  const MultiGraph c4 = Cycle4();
  const Divisor a{1, 0, 1, 0}, b{0, 1, 0, 1};
  bool brute = false;
  oracle::ForEachFiring(4, 4, 0, [&](const std::vector<int>& x) {
    brute = brute || oracle::Fire(c4, a, x) == b;
  });
  // around the cycle the two differ by twice a generator of Z/4
  CHECK(Equivalent(c4, a, b) == brute);
  CHECK_FALSE(Equivalent(c4, a, b));
  // with K_2 x K_2 labels (v0 ~ v1, v0 ~ v2) they are equivalent
  const MultiGraph square = RookGraph(std::vector<int>{2, 2});
  bool square_brute = false;
  oracle::ForEachFiring(4, 4, 0, [&](const std::vector<int>& x) {
    square_brute = square_brute || oracle::Fire(square, a, x) == b;
  });
  CHECK(square_brute);
  CHECK(Equivalent(square, a, b));
  CHECK_FALSE(Equivalent(c4, a, {1, 0, 0, 0}));
  CHECK(Equivalent(c4, {3, -1, 0, 2}, FireSet(c4, {3, -1, 0, 2}, Bit(1) | Bit(2))));
}

TEST_CASE("line totals") {
  const MultiGraph g = RookGraph(std::vector<int>{2, 3});
  const LineTotals t = PoorestLineStatistics(g, {1, 0, 2, 0, 0, 3});
  CHECK(t.rows == std::vector<std::int64_t>{3, 3});
  CHECK(t.columns == std::vector<std::int64_t>{1, 0, 5});
}

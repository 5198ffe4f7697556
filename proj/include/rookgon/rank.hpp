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

#ifndef ROOKGON_RANK_HPP_
#define ROOKGON_RANK_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "rookgon/divisor.hpp"
#include "rookgon/graph.hpp"

namespace rookgon {

struct DivisorHash {
  size_t operator()(const Divisor& d) const noexcept;
};

// Baker-Norine rank via the vertex-removal recursion
//   rank(D) >= r  iff  rank(D - u) >= r - 1 for every vertex u,
// memoized on the reduced form at vertex 0. One engine per graph; not
// thread-safe, so give each worker its own.
class RankEngine {
 public:
  explicit RankEngine(const MultiGraph& g) : g_(g) {}

  const MultiGraph& graph() const { return g_; }

  bool Winnable(const Divisor& d);
  bool RankAtLeast(const Divisor& d, int r);
  int Rank(const Divisor& d);

  // Vertices of an effective divisor E of degree r with D - E unwinnable, or
  // nullopt when rank(D) >= r. The list has r entries (with repetition).
  std::optional<std::vector<int>> FindTheft(const Divisor& d, int r);

  size_t memo_size() const { return memo_.size(); }

 private:
  struct Entry {
    int at_least = 0;         // rank >= at_least is proven
    int below = 1 << 29;      // rank < below is proven
    std::vector<std::pair<int, int>> failing;  // (r, vertex) refutations
  };

  // Returns the v0-reduced divisor, or nullopt if it is unwinnable.
  std::optional<Divisor> Canonical(const Divisor& d);
  bool AtLeastReduced(const Divisor& q, int r);

  const MultiGraph& g_;
  std::unordered_map<Divisor, Entry, DivisorHash> memo_;
};

struct RankCheck {
  bool holds = true;
  // Stolen chips, as an effective divisor, when the check fails.
  std::optional<Divisor> counterexample;
};

RankCheck VerifyRankAtLeast(const MultiGraph& g, const Divisor& d, int k);
int Rank(const MultiGraph& g, const Divisor& d);

}  // namespace rookgon

#endif  // ROOKGON_RANK_HPP_

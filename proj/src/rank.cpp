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

#include "rookgon/rank.hpp"

#include <algorithm>
#include <numeric>

#include "rookgon/error.hpp"

namespace rookgon {

size_t DivisorHash::operator()(const Divisor& d) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (int x : d) {
    h ^= static_cast<std::uint32_t>(x);
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h ^ (h >> 29));
}

std::optional<Divisor> RankEngine::Canonical(const Divisor& d) {
  if (Degree(d) < 0) return std::nullopt;
  Divisor q = Reduce(g_, d, 0).reduced;
  if (q[0] < 0) return std::nullopt;
  return q;
}

bool RankEngine::Winnable(const Divisor& d) {
  if (d.size() != static_cast<size_t>(g_.vertex_count())) {
    Fail(ErrorCode::kInvalidArgument, "divisor length does not match the graph");
  }
  return Canonical(d).has_value();
}

bool RankEngine::AtLeastReduced(const Divisor& q, int r) {
  if (r <= 0) return true;
  if (Degree(q) < r) return false;
  if (auto it = memo_.find(q); it != memo_.end()) {
    if (r <= it->second.at_least) return true;
    if (r >= it->second.below) return false;
  }

  // Poor vertices first: they are where a theft is most likely to stick.
  const int n = g_.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return q[a] < q[b]; });

  for (int u : order) {
    if (r == 1 && q[u] >= 1) continue;
    Divisor child = q;
    --child[u];
    const std::optional<Divisor> reduced = Canonical(child);
    if (!reduced || !AtLeastReduced(*reduced, r - 1)) {
      Entry& entry = memo_[q];
      entry.below = std::min(entry.below, r);
      entry.failing.emplace_back(r, u);
      return false;
    }
  }
  Entry& entry = memo_[q];
  entry.at_least = std::max(entry.at_least, r);
  return true;
}

bool RankEngine::RankAtLeast(const Divisor& d, int r) {
  if (r < 0) return true;
  const std::optional<Divisor> q = Canonical(d);
  if (!q) return false;
  return AtLeastReduced(*q, r);
}

int RankEngine::Rank(const Divisor& d) {
  const std::optional<Divisor> q = Canonical(d);
  if (!q) return -1;
  int r = 0;
  // rank never exceeds the degree
  while (r < Degree(*q) && AtLeastReduced(*q, r + 1)) ++r;
  return r;
}

std::optional<std::vector<int>> RankEngine::FindTheft(const Divisor& d, int r) {
  if (r < 0) return std::nullopt;
  const std::optional<Divisor> q = Canonical(d);
  if (!q) return std::vector<int>(r, 0);
  if (AtLeastReduced(*q, r)) return std::nullopt;

  // Refuted by the degree bound alone: any r chips leave a negative degree.
  const auto it = memo_.find(*q);
  if (it == memo_.end()) return std::vector<int>(r, 0);
  // copied: the recursion below grows the memo
  const std::vector<std::pair<int, int>> failing = it->second.failing;
  int culprit = -1;
  for (const auto& [level, u] : failing) {
    if (level <= r) {
      // A refutation at a lower level also refutes r; pad with extra thefts.
      culprit = u;
      Divisor child = *q;
      --child[culprit];
      std::optional<std::vector<int>> rest = FindTheft(child, level - 1);
      if (!rest) continue;
      rest->insert(rest->begin(), culprit);
      while (static_cast<int>(rest->size()) < r) rest->push_back(culprit);
      std::sort(rest->begin(), rest->end());
      return rest;
    }
  }
  // Only reachable when the degree bound refuted r.
  std::vector<int> theft(r, 0);
  return theft;
}

RankCheck VerifyRankAtLeast(const MultiGraph& g, const Divisor& d, int k) {
  if (k < 0) Fail(ErrorCode::kInvalidArgument, "rank target must be >= 0");
  if (d.size() != static_cast<size_t>(g.vertex_count())) {
    Fail(ErrorCode::kInvalidArgument, "divisor length does not match the graph");
  }
  RankEngine engine(g);
  const std::optional<std::vector<int>> theft = engine.FindTheft(d, k);
  if (!theft) return {};
  Divisor stolen(g.vertex_count(), 0);
  for (int v : *theft) ++stolen[v];
  return {false, stolen};
}

int Rank(const MultiGraph& g, const Divisor& d) {
  if (d.size() != static_cast<size_t>(g.vertex_count())) {
    Fail(ErrorCode::kInvalidArgument, "divisor length does not match the graph");
  }
  RankEngine engine(g);
  return engine.Rank(d);
}

}  // namespace rookgon

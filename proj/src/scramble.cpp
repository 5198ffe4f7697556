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

#include "rookgon/scramble.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "rookgon/error.hpp"
#include "rookgon/hash.hpp"
#include "rookgon/parallel.hpp"
#include "rookgon/symmetry.hpp"

namespace rookgon {

bool LexLess(VertexMask a, VertexMask b) {
  while (a != 0 && b != 0) {
    const int la = Lowest(a);
    const int lb = Lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Scramble::Scramble(std::shared_ptr<const MultiGraph> host, std::vector<VertexMask> eggs)
    : host_(std::move(host)), eggs_(std::move(eggs)) {
  if (!host_) Fail(ErrorCode::kInvalidArgument, "scramble needs a host graph");
  for (VertexMask e : eggs_) {
    if (e & ~host_->all()) Fail(ErrorCode::kInvalidArgument, "egg vertex out of range");
  }
  std::sort(eggs_.begin(), eggs_.end(), LexLess);
  eggs_.erase(std::unique(eggs_.begin(), eggs_.end()), eggs_.end());
}

namespace {

std::vector<VertexMask> ListsToMasks(const MultiGraph& host,
                                     const std::vector<VertexList>& eggs) {
  std::vector<VertexMask> masks;
  masks.reserve(eggs.size());
  for (const VertexList& egg : eggs) {
    for (int v : egg) {
      if (v < 0 || v >= host.vertex_count()) {
        Fail(ErrorCode::kInvalidArgument, "egg vertex out of range");
      }
    }
    masks.push_back(ToMask(egg));
  }
  return masks;
}

}  // namespace

Scramble::Scramble(std::shared_ptr<const MultiGraph> host,
                   const std::vector<VertexList>& eggs)
    : Scramble(host, host ? ListsToMasks(*host, eggs) : std::vector<VertexMask>{}) {}

std::vector<VertexList> Scramble::EggLists() const {
  std::vector<VertexList> out;
  out.reserve(eggs_.size());
  for (VertexMask e : eggs_) out.push_back(ToList(e));
  return out;
}

std::string Scramble::Digest() const {
  std::ostringstream text;
  text << "n=" << host_->vertex_count() << ";edges=";
  for (const Edge& e : host_->Edges()) text << e.u << ',' << e.v << ',' << e.multiplicity << ';';
  text << "eggs=";
  for (VertexMask egg : eggs_) {
    for (int v : ToList(egg)) text << v << ',';
    text << ';';
  }
  return Sha256Hex(text.str());
}

std::vector<EggViolation> ValidateScramble(const Scramble& s) {
  std::vector<EggViolation> violations;
  for (size_t i = 0; i < s.eggs().size(); ++i) {
    const VertexMask egg = s.eggs()[i];
    if (egg == 0) {
      violations.push_back({i, EggViolation::Kind::kEmpty});
    } else if (!IsConnectedSubset(s.host(), egg)) {
      violations.push_back({i, EggViolation::Kind::kDisconnected});
    }
  }
  return violations;
}

namespace {

void RequireNonemptyEggs(const Scramble& s) {
  for (VertexMask e : s.eggs()) {
    if (e == 0) Fail(ErrorCode::kPrecondition, "scramble contains an empty egg");
  }
}

// Eggs with no other egg strictly inside them, in scramble order.
std::vector<VertexMask> MinimalEggs(const std::vector<VertexMask>& eggs) {
  std::vector<std::vector<VertexMask>> by_lowest(kMaxVertices);
  std::vector<size_t> order(eggs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return Count(eggs[a]) < Count(eggs[b]); });
  std::vector<char> keep(eggs.size(), 1);
  for (size_t idx : order) {
    const VertexMask e = eggs[idx];
    bool dominated = false;
    for (VertexMask rest = e; rest != 0 && !dominated; rest &= rest - 1) {
      for (VertexMask smaller : by_lowest[Lowest(rest)]) {
        if ((smaller & ~e) == 0) {
          dominated = true;
          break;
        }
      }
    }
    if (dominated) {
      keep[idx] = 0;
    } else {
      by_lowest[Lowest(e)].push_back(e);
    }
  }
  std::vector<VertexMask> out;
  for (size_t i = 0; i < eggs.size(); ++i) {
    if (keep[i]) out.push_back(eggs[i]);
  }
  return out;
}

// Maximum avoidance set search. Vertices are taken in index order; best_[i]
// is the largest avoidance set inside {i, ..., n-1} (a Russian doll bound),
// filled from the last vertex backwards.
class AvoidanceSolver {
 public:
  AvoidanceSolver(int n, std::vector<VertexMask> eggs)
      : n_(n),
        eggs_(std::move(eggs)),
        eggs_of_(n),
        missing_(eggs_.size()),
        blocked_(n, 0),
        best_(n + 1, 0) {
    for (size_t e = 0; e < eggs_.size(); ++e) {
      missing_[e] = Count(eggs_[e]);
      for (VertexMask rest = eggs_[e]; rest != 0; rest &= rest - 1) {
        eggs_of_[Lowest(rest)].push_back(static_cast<int>(e));
      }
      if (missing_[e] == 1) Block(Lowest(eggs_[e]));
    }
  }

  VertexMask Solve() {
    VertexMask witness = 0;
    for (int i = n_ - 1; i >= 0; --i) {
      best_[i] = best_[i + 1];
      if (Contains(blocked_mask_, i)) continue;
      const int target = best_[i + 1] + 1;
      Include(i);
      const VertexMask above = AllVertices(n_) & ~AllVertices(i + 1);
      if (Search(above & ~blocked_mask_, 1, target)) best_[i] = target;
      Remove(i);
    }
    // Second pass: include-first DFS in index order finds the
    // lexicographically smallest optimum.
    if (best_[0] > 0) {
      Search(AllVertices(n_) & ~blocked_mask_, 0, best_[0]);
      witness = found_;
    }
    return witness;
  }

  int best() const { return best_[0]; }

 private:
  void Block(int u) {
    if (blocked_[u]++ == 0) blocked_mask_ |= Bit(u);
  }
  void Unblock(int u) {
    if (--blocked_[u] == 0) blocked_mask_ &= ~Bit(u);
  }

  void Include(int v) {
    included_ |= Bit(v);
    for (int e : eggs_of_[v]) {
      if (--missing_[e] == 1) Block(Lowest(eggs_[e] & ~included_));
    }
  }

  void Remove(int v) {
    for (int e : eggs_of_[v]) {
      if (missing_[e] == 1) Unblock(Lowest(eggs_[e] & ~included_));
      ++missing_[e];
    }
    included_ &= ~Bit(v);
  }

  bool Search(VertexMask candidates, int size, int target) {
    if (size == target) {
      found_ = included_;
      return true;
    }
    while (candidates != 0) {
      const int j = Lowest(candidates);
      if (size + std::min(best_[j], Count(candidates)) < target) return false;
      candidates &= candidates - 1;
      Include(j);
      const bool ok = Search(candidates & ~blocked_mask_, size + 1, target);
      Remove(j);
      if (ok) return true;
    }
    return false;
  }

  int n_;
  std::vector<VertexMask> eggs_;
  std::vector<std::vector<int>> eggs_of_;
  std::vector<int> missing_;
  std::vector<int> blocked_;
  VertexMask blocked_mask_ = 0;
  VertexMask included_ = 0;
  VertexMask found_ = 0;
  std::vector<int> best_;
};

}  // namespace

HittingResult HittingNumber(const Scramble& s) {
  RequireNonemptyEggs(s);
  const int n = s.host().vertex_count();
  AvoidanceSolver solver(n, MinimalEggs(s.eggs()));
  const VertexMask avoidance = solver.Solve();
  HittingResult result;
  result.avoidance_set = ToList(avoidance);
  result.hitting_set = ToList(s.host().all() & ~avoidance);
  result.hitting_number = n - Count(avoidance);
  return result;
}

namespace {

// Orbit representatives of `eggs` under the rook group of the host, or an
// empty vector when the host is not a rook graph or the egg set is not
// invariant.
std::vector<size_t> EggOrbitRepresentatives(const MultiGraph& host,
                                            const std::vector<VertexMask>& eggs) {
  if (!host.IsRook()) return {};
  std::unordered_map<VertexMask, size_t> index;
  index.reserve(eggs.size() * 2);
  for (size_t i = 0; i < eggs.size(); ++i) index.emplace(eggs[i], i);

  std::vector<size_t> parent(eggs.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Permutation& p : RookSymmetry(host.dims()).generators) {
    for (size_t i = 0; i < eggs.size(); ++i) {
      const auto it = index.find(Permute(eggs[i], p));
      if (it == index.end()) return {};
      const size_t a = find(i);
      const size_t b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<size_t> reps;
  for (size_t i = 0; i < eggs.size(); ++i) {
    if (find(i) == i) reps.push_back(i);
  }
  return reps;
}

}  // namespace

EggCutResult MinEggCut(const Scramble& s, int threads) {
  RequireNonemptyEggs(s);
  const MultiGraph& g = s.host();
  const std::vector<VertexMask> eggs = MinimalEggs(s.eggs());
  EggCutResult result;

  std::vector<size_t> firsts = EggOrbitRepresentatives(g, eggs);
  result.used_symmetry = !firsts.empty();
  if (firsts.empty()) {
    firsts.resize(eggs.size());
    std::iota(firsts.begin(), firsts.end(), 0);
  }

  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();
  std::atomic<std::int64_t> global_best{kNone};
  std::atomic<std::int64_t> examined{0};
  struct Local {
    std::int64_t value = kNone;
    size_t item = 0;
    FlowResult flow;
  };
  threads = std::max(1, threads);
  std::vector<Local> locals(threads);
  const size_t total = firsts.size() * eggs.size();

  ParallelSlices(total, threads, [&](int w, size_t begin, size_t end) {
    Local& local = locals[w];
    std::int64_t count = 0;
    for (size_t item = begin; item < end; ++item) {
      const size_t i = firsts[item / eggs.size()];
      const size_t j = item % eggs.size();
      if (eggs[i] & eggs[j]) continue;
      if (!result.used_symmetry && j < i) continue;
      ++count;
      // Equal values are still wanted from other workers: the earliest pair
      // in scan order wins.
      std::int64_t limit = global_best.load(std::memory_order_relaxed);
      if (limit != kNone) ++limit;
      limit = std::min(limit, local.value);
      std::optional<FlowResult> flow = MinCutBelow(g, eggs[i], eggs[j], limit);
      if (!flow) continue;
      local.value = flow->value;
      local.item = item;
      local.flow = std::move(*flow);
      std::int64_t seen = global_best.load();
      while (local.value < seen && !global_best.compare_exchange_weak(seen, local.value)) {
      }
    }
    examined += count;
  });
  result.pairs_examined = examined.load();

  const Local* best = nullptr;
  for (const Local& local : locals) {
    if (local.value == kNone) continue;
    if (!best || local.value < best->value ||
        (local.value == best->value && local.item < best->item)) {
      best = &local;
    }
  }
  if (!best) return result;
  const size_t i = firsts[best->item / eggs.size()];
  const size_t j = best->item % eggs.size();
  CutWitness witness;
  witness.egg_a = ToList(eggs[i]);
  witness.egg_b = ToList(eggs[j]);
  witness.side_a = best->flow.source_side;
  witness.side_b = ToList(g.all() & ~ToMask(witness.side_a));
  witness.weight = best->value;
  result.value = best->value;
  result.witness = std::move(witness);
  return result;
}

OrderReport ScrambleOrder(const Scramble& s, int threads) {
  OrderReport report;
  const HittingResult hitting = HittingNumber(s);
  report.hitting_number = hitting.hitting_number;
  report.max_avoidance = hitting.avoidance_set;
  const EggCutResult cut = MinEggCut(s, threads);
  report.min_egg_cut = cut.value;
  report.cut_witness = cut.witness;
  report.order = cut.value ? std::min<std::int64_t>(hitting.hitting_number, *cut.value)
                           : hitting.hitting_number;
  return report;
}

}  // namespace rookgon

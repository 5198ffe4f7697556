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

// Brute-force reference implementations used only by the tests. They are
// deliberately naive and share no code with the library algorithms beyond
// the MultiGraph accessors.

#ifndef ROOKGON_TESTS_ORACLES_HPP_
#define ROOKGON_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "rookgon/graph.hpp"

namespace oracle {

using rookgon::MultiGraph;
using Mask = std::uint64_t;

inline bool Has(Mask m, int v) { return (m >> v) & 1; }
inline int Popcount(Mask m) { return __builtin_popcountll(m); }

inline bool Connected(const MultiGraph& g, Mask s) {
  if (s == 0) return false;
  const int n = g.vertex_count();
  int start = 0;
  while (!Has(s, start)) ++start;
  Mask seen = Mask{1} << start;
  std::vector<int> stack{start};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v) {
      if (Has(s, v) && !Has(seen, v) && g.multiplicity(u, v) > 0) {
        seen |= Mask{1} << v;
        stack.push_back(v);
      }
    }
  }
  return seen == s;
}

inline std::int64_t BruteCutWeight(const MultiGraph& g, Mask a) {
  std::int64_t w = 0;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (Has(a, u) && !Has(a, v)) w += g.multiplicity(u, v);
    }
  }
  return w;
}

inline std::vector<int> Components(const MultiGraph& g, Mask s) {
  std::vector<int> sizes;
  Mask left = s;
  while (left) {
    // grow the component of the lowest remaining vertex
    Mask comp = left & -left;
    for (bool grew = true; grew;) {
      grew = false;
      for (int u = 0; u < g.vertex_count(); ++u) {
        if (!Has(comp, u)) continue;
        for (int v = 0; v < g.vertex_count(); ++v) {
          if (Has(left, v) && !Has(comp, v) && g.multiplicity(u, v) > 0) {
            comp |= Mask{1} << v;
            grew = true;
          }
        }
      }
    }
    sizes.push_back(Popcount(comp));
    left &= ~comp;
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Minimum weight over every vertex set containing s and avoiding t.
inline std::int64_t MinSeparatingCut(const MultiGraph& g, Mask s, Mask t) {
  const Mask all = (g.vertex_count() == 64) ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
  const Mask free = all & ~s & ~t;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  // enumerate subsets of the free vertices
  for (Mask sub = free;; sub = (sub - 1) & free) {
    best = std::min(best, BruteCutWeight(g, s | sub));
    if (sub == 0) break;
  }
  return best;
}

inline int HittingNumber(int n, const std::vector<Mask>& eggs) {
  int best = n;
  for (Mask h = 0; h < (Mask{1} << n); ++h) {
    if (Popcount(h) >= best) continue;
    bool hits = true;
    for (Mask e : eggs) hits = hits && (e & h) != 0;
    if (hits) best = Popcount(h);
  }
  return best;
}

// Minimum weight of a vertex bipartition with an egg on each side; nullopt
// if no bipartition qualifies.
inline std::optional<std::int64_t> MinEggCut(const MultiGraph& g, const std::vector<Mask>& eggs) {
  const int n = g.vertex_count();
  const Mask all = (Mask{1} << n) - 1;
  std::optional<std::int64_t> best;
  for (Mask a = 1; a < all; ++a) {
    bool left = false, right = false;
    for (Mask e : eggs) {
      left = left || (e & ~a) == 0;
      right = right || (e & a) == 0;
    }
    if (left && right) {
      const std::int64_t w = BruteCutWeight(g, a);
      if (!best || w < *best) best = w;
    }
  }
  return best;
}

// v-reduced by definition: effective away from v and no nonempty set
// avoiding v can fire without going into debt.
inline bool IsReduced(const MultiGraph& g, const std::vector<int>& d, int v) {
  const int n = g.vertex_count();
  for (int u = 0; u < n; ++u) {
    if (u != v && d[u] < 0) return false;
  }
  for (Mask a = 1; a < (Mask{1} << n); ++a) {
    if (Has(a, v)) continue;
    bool legal = true;
    for (int u = 0; u < n && legal; ++u) {
      if (!Has(a, u)) continue;
      int out = 0;
      for (int w = 0; w < n; ++w) {
        if (!Has(a, w)) out += g.multiplicity(u, w);
      }
      legal = d[u] >= out;
    }
    if (legal) return false;
  }
  return true;
}

// d - L x for integer firing vector x.
inline std::vector<int> Fire(const MultiGraph& g, const std::vector<int>& d,
                             const std::vector<int>& x) {
  std::vector<int> out = d;
  for (int u = 0; u < g.vertex_count(); ++u) {
    for (int w = 0; w < g.vertex_count(); ++w) {
      out[u] -= g.multiplicity(u, w) * (x[u] - x[w]);
    }
  }
  return out;
}

// Calls visit(x) for every x in [-bound, bound]^n with x[pin] = 0.
template <typename Visit>
void ForEachFiring(int n, int bound, int pin, Visit&& visit) {
  std::vector<int> x(n, -bound);
  x[pin] = 0;
  while (true) {
    visit(x);
    int i = 0;
    for (; i < n; ++i) {
      if (i == pin) continue;
      if (x[i] < bound) {
        ++x[i];
        break;
      }
      x[i] = -bound;
    }
    if (i == n) return;
  }
}

// Winnability by searching a box of firing vectors.
inline bool WinnableInBox(const MultiGraph& g, const std::vector<int>& d, int bound) {
  bool found = false;
  ForEachFiring(g.vertex_count(), bound, 0, [&](const std::vector<int>& x) {
    if (found) return;
    const std::vector<int> e = Fire(g, d, x);
    found = std::all_of(e.begin(), e.end(), [](int c) { return c >= 0; });
  });
  return found;
}

// Effective divisors of a given degree on n vertices.
inline std::vector<std::vector<int>> EffectiveDivisors(int n, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> d(n, 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == n - 1) {
      d[i] = left;
      out.push_back(d);
      return;
    }
    for (int c = left; c >= 0; --c) {
      d[i] = c;
      self(self, i + 1, left - c);
    }
  };
  if (n > 0) rec(rec, 0, degree);
  return out;
}

}  // namespace oracle

#endif  // ROOKGON_TESTS_ORACLES_HPP_

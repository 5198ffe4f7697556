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

#ifndef ROOKGON_VERTEX_SET_HPP_
#define ROOKGON_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace rookgon {

// Hosts are capped at 64 vertices so that every vertex set fits one word.
inline constexpr int kMaxVertices = 64;

using VertexMask = std::uint64_t;

// Sorted list of distinct vertex indices. This is the form used at API and
// serialization boundaries; the algorithms work on VertexMask.
using VertexList = std::vector<int>;

inline VertexMask Bit(int v) { return VertexMask{1} << v; }

inline VertexMask AllVertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (Bit(n) - 1);
}

inline int Count(VertexMask m) { return std::popcount(m); }

inline bool Contains(VertexMask m, int v) { return (m >> v) & 1U; }

inline int Lowest(VertexMask m) { return std::countr_zero(m); }

inline VertexMask ToMask(std::span<const int> vertices) {
  VertexMask m = 0;
  for (int v : vertices) m |= Bit(v);
  return m;
}

inline VertexList ToList(VertexMask m) {
  VertexList out;
  out.reserve(Count(m));
  while (m != 0) {
    out.push_back(Lowest(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace rookgon

#endif  // ROOKGON_VERTEX_SET_HPP_

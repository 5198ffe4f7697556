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

#ifndef ROOKGON_SYMMETRY_HPP_
#define ROOKGON_SYMMETRY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "rookgon/divisor.hpp"
#include "rookgon/graph.hpp"

namespace rookgon {

// A permutation p maps vertex v to p[v].
using Permutation = std::vector<int>;

// Group generated by vertex permutations. `dims` records the rook structure
// the generators came from; canonical forms use it for a structured search.
struct SymmetryGroup {
  std::vector<Permutation> generators;
  std::vector<int> dims;
};

// Adjacent transpositions inside every factor, plus swaps of adjacent
// factors with equal size.
SymmetryGroup RookSymmetry(std::span<const int> dims);

bool IsAutomorphism(const MultiGraph& g, const Permutation& p);

// Image of d under p: result[p[v]] = d[v].
Divisor Permute(const Divisor& d, const Permutation& p);
VertexMask Permute(VertexMask s, const Permutation& p);

// Closure of the generators. Throws if the group has more than `limit`
// elements.
std::vector<Permutation> EnumerateGroup(const SymmetryGroup& group,
                                        size_t limit = 1 << 20);

// Lexicographically smallest image of a divisor under a rook group.
//
// The group acts by independent permutations of each coordinate plus swaps
// of equal factors. The canonizer enumerates the factor swaps and the
// permutations of every axis except the last; for each such arrangement the
// best permutation of the last axis is obtained by sorting the last-axis
// fibres lexicographically, which is exact because row-major order compares
// those fibres column by column.
class DivisorCanonizer {
 public:
  explicit DivisorCanonizer(const SymmetryGroup& group);

  Divisor Canonical(const Divisor& d) const;
  bool IsCanonical(const Divisor& d) const;
  size_t arrangement_count() const { return arrangements_.size(); }

 private:
  // Best image of d for one arrangement of the non-final axes.
  void Image(const std::vector<int>& sources, const Divisor& d,
             std::vector<int>& scratch, Divisor& out) const;

  int vertex_count_ = 0;
  int fibre_ = 1;  // size of the last axis
  int rows_ = 1;   // vertex_count_ / fibre_
  std::vector<std::vector<int>> arrangements_;
  // Generic fallback for groups without rook structure.
  std::vector<Permutation> elements_;
};

Divisor CanonicalDivisorForm(const Divisor& d, const SymmetryGroup& group);

}  // namespace rookgon

#endif  // ROOKGON_SYMMETRY_HPP_

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

#ifndef ROOKGON_SCRAMBLE_HPP_
#define ROOKGON_SCRAMBLE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rookgon/graph.hpp"
#include "rookgon/vertex_set.hpp"

namespace rookgon {

// A collection of eggs over a host graph. Eggs are deduplicated and kept in
// lexicographic order of their sorted vertex lists; validity (nonempty and
// connected) is checked separately by ValidateScramble.
class Scramble {
 public:
  Scramble(std::shared_ptr<const MultiGraph> host, std::vector<VertexMask> eggs);
  Scramble(std::shared_ptr<const MultiGraph> host,
           const std::vector<VertexList>& eggs);

  const MultiGraph& host() const { return *host_; }
  const std::shared_ptr<const MultiGraph>& host_ptr() const { return host_; }
  const std::vector<VertexMask>& eggs() const { return eggs_; }
  std::vector<VertexList> EggLists() const;

  // SHA-256 over the host edge list and the egg lists.
  std::string Digest() const;

  bool operator==(const Scramble& other) const {
    return *host_ == *other.host_ && eggs_ == other.eggs_;
  }

 private:
  std::shared_ptr<const MultiGraph> host_;
  std::vector<VertexMask> eggs_;
};

// Orders masks by their sorted vertex lists.
bool LexLess(VertexMask a, VertexMask b);

struct EggViolation {
  enum class Kind { kEmpty, kDisconnected };
  size_t egg_index;
  Kind kind;
};

std::vector<EggViolation> ValidateScramble(const Scramble& s);

struct HittingResult {
  int hitting_number = 0;
  VertexList hitting_set;
  // Lexicographically smallest maximum avoidance set; the hitting set is its
  // complement.
  VertexList avoidance_set;
};

// Exact minimum hitting set through a maximum avoidance set.
HittingResult HittingNumber(const Scramble& s);

struct CutWitness {
  VertexList egg_a;
  VertexList egg_b;
  VertexList side_a;  // contains egg_a; the minimal source side
  VertexList side_b;
  std::int64_t weight = 0;
};

struct EggCutResult {
  std::optional<std::int64_t> value;  // nullopt: no two disjoint eggs
  std::optional<CutWitness> witness;
  std::int64_t pairs_examined = 0;
  bool used_symmetry = false;
};

// Minimum over disjoint egg pairs of the min cut separating them. Only
// inclusion-minimal eggs are paired. When the host is a rook graph and the
// scramble is invariant under its symmetry group, the first egg of each pair
// ranges over orbit representatives only.
EggCutResult MinEggCut(const Scramble& s, int threads = 1);

struct OrderReport {
  int hitting_number = 0;
  VertexList max_avoidance;
  std::optional<std::int64_t> min_egg_cut;  // nullopt reads as +infinity
  std::optional<CutWitness> cut_witness;
  std::int64_t order = 0;
};

OrderReport ScrambleOrder(const Scramble& s, int threads = 1);

}  // namespace rookgon

#endif  // ROOKGON_SCRAMBLE_HPP_

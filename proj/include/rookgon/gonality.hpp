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

#ifndef ROOKGON_GONALITY_HPP_
#define ROOKGON_GONALITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rookgon/divisor.hpp"
#include "rookgon/graph.hpp"
#include "rookgon/symmetry.hpp"

namespace rookgon {

struct GonalityOptions {
  int k = 1;
  // Defaults to DefaultDegreeCap().
  std::optional<int> degree_cap;
  // One representative per orbit is searched when set.
  std::optional<SymmetryGroup> symmetry;
  // Degrees below this are taken as already refuted (e.g. by a scramble).
  std::optional<int> lower_bound;
  int threads = 1;
};

struct DegreeStats {
  int degree = 0;
  // Orbit representatives examined at this degree (all of them for a refuted
  // degree, up to and including the witness otherwise).
  std::int64_t orbits = 0;
  bool refuted = false;
};

struct GonalityResult {
  int k = 1;
  int degree_cap = 0;
  std::optional<int> value;  // nullopt when the cap was exhausted
  Divisor witness;
  // True when every degree in [k, value) (or up to the cap) was refuted by
  // this search rather than skipped through a lower bound.
  bool exhaustive = false;
  std::vector<DegreeStats> degrees;

  bool found() const { return value.has_value(); }
};

// Steps through effective divisors of a fixed degree in lexicographic order.
class CompositionIterator {
 public:
  CompositionIterator(int vertex_count, int degree);
  const Divisor& current() const { return current_; }
  bool Next();

 private:
  Divisor current_;
  int degree_;
};

int DefaultDegreeCap(const MultiGraph& g, int k);

// Smallest degree d >= k carrying an effective divisor of rank >= k, with
// the lexicographically smallest such divisor as witness. The witness and
// statistics do not depend on the thread count.
GonalityResult KGonality(const MultiGraph& g, const GonalityOptions& options);

// Divisors of rank >= k on rook graphs: for k = 1 ones everywhere except on
// the layer where the smallest factor's coordinate is 0; for k = 3 all ones.
Divisor RookCertificateDivisor(std::span<const int> dims, int k);

}  // namespace rookgon

#endif  // ROOKGON_GONALITY_HPP_

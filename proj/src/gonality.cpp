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

#include "rookgon/gonality.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "rookgon/error.hpp"
#include "rookgon/parallel.hpp"
#include "rookgon/rank.hpp"

namespace rookgon {

namespace {

constexpr size_t kChunk = size_t{1} << 14;

void CheckRookDims(std::span<const int> dims) {
  if (dims.size() < 2) Fail(ErrorCode::kInvalidSize, "rook dims need two factors");
  std::int64_t size = 1;
  for (int d : dims) {
    if (d < 2) Fail(ErrorCode::kInvalidSize, "rook factors must have size >= 2");
    size *= d;
  }
  if (size > kMaxVertices) Fail(ErrorCode::kInvalidSize, "rook graph too large");
}

}  // namespace

CompositionIterator::CompositionIterator(int vertex_count, int degree)
    : current_(vertex_count, 0), degree_(degree) {
  if (vertex_count < 1 || degree < 0) {
    Fail(ErrorCode::kInvalidArgument, "bad composition shape");
  }
  current_.back() = degree;
}

bool CompositionIterator::Next() {
  const int n = static_cast<int>(current_.size());
  if (n == 1) return false;
  if (current_[n - 1] > 0) {
    ++current_[n - 2];
    --current_[n - 1];
    return true;
  }
  int q = n - 2;
  while (q >= 0 && current_[q] == 0) --q;
  if (q <= 0) return false;
  const int moved = current_[q];
  current_[q] = 0;
  ++current_[q - 1];
  current_[n - 1] = moved - 1;
  return true;
}

int DefaultDegreeCap(const MultiGraph& g, int k) {
  const int n = g.vertex_count();
  if (g.IsRook()) {
    const std::vector<int>& dims = g.dims();
    if (k == 1) {
      const int smallest = *std::min_element(dims.begin(), dims.end());
      return n - n / smallest;
    }
    if (dims.size() == 2 && k == 3) return n;
    if (dims.size() == 2 && k == 2) return n - 1;
  }
  return static_cast<int>(std::max<std::int64_t>(n + g.genus(), g.genus() + k));
}

GonalityResult KGonality(const MultiGraph& g, const GonalityOptions& options) {
  if (options.k < 1) Fail(ErrorCode::kInvalidArgument, "k must be >= 1");
  GonalityResult result;
  result.k = options.k;
  result.degree_cap = options.degree_cap.value_or(DefaultDegreeCap(g, options.k));
  if (result.degree_cap < options.k) {
    Fail(ErrorCode::kInvalidArgument, "degree cap must be >= k");
  }

  std::optional<DivisorCanonizer> canonizer;
  if (options.symmetry) {
    for (const Permutation& p : options.symmetry->generators) {
      if (!IsAutomorphism(g, p)) {
        Fail(ErrorCode::kInvalidArgument, "symmetry generator is not an automorphism");
      }
    }
    canonizer.emplace(*options.symmetry);
  }

  const int threads = std::max(1, options.threads);
  std::vector<RankEngine> engines;
  engines.reserve(threads);
  for (int w = 0; w < threads; ++w) engines.emplace_back(g);

  const int start = std::max(options.k, options.lower_bound.value_or(options.k));
  result.exhaustive = start == options.k;

  std::vector<Divisor> chunk;
  std::vector<char> canonical;
  std::vector<char> success;
  for (int degree = start; degree <= result.degree_cap; ++degree) {
    DegreeStats stats{degree, 0, false};
    CompositionIterator it(g.vertex_count(), degree);
    bool more = true;
    std::optional<size_t> hit;
    while (more && !hit) {
      chunk.clear();
      do {
        chunk.push_back(it.current());
        more = it.Next();
      } while (more && chunk.size() < kChunk);

      canonical.assign(chunk.size(), 0);
      success.assign(chunk.size(), 0);
      ParallelSlices(chunk.size(), threads, [&](int w, size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
          canonical[i] = !canonizer || canonizer->IsCanonical(chunk[i]);
          if (canonical[i] && engines[w].RankAtLeast(chunk[i], options.k)) {
            success[i] = 1;
            return;
          }
        }
      });

      const auto first = std::find(success.begin(), success.end(), 1);
      const size_t examined = first == success.end()
                                  ? chunk.size()
                                  : static_cast<size_t>(first - success.begin()) + 1;
      stats.orbits += std::count(canonical.begin(), canonical.begin() + examined, 1);
      if (first != success.end()) hit = examined - 1;
    }
    if (hit) {
      result.value = degree;
      result.witness = chunk[*hit];
      result.degrees.push_back(stats);
      return result;
    }
    stats.refuted = true;
    result.degrees.push_back(stats);
  }
  return result;
}

Divisor RookCertificateDivisor(std::span<const int> dims, int k) {
  CheckRookDims(dims);
  const int n = std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
  if (k == 3) return Divisor(n, 1);
  if (k != 1) {
    Fail(ErrorCode::kUnsupported,
         "certificates exist for k = 1 and k = 3 only, got k = " + std::to_string(k));
  }
  const size_t axis = std::min_element(dims.begin(), dims.end()) - dims.begin();
  int stride = 1;
  for (size_t i = axis + 1; i < dims.size(); ++i) stride *= dims[i];
  Divisor d(n, 1);
  for (int v = 0; v < n; ++v) {
    if ((v / stride) % dims[axis] == 0) d[v] = 0;
  }
  return d;
}

}  // namespace rookgon

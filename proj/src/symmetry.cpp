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

#include "rookgon/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rookgon/error.hpp"

namespace rookgon {

namespace {

int Product(std::span<const int> dims) {
  return std::accumulate(dims.begin(), dims.end(), 1, std::multiplies<>());
}

int Encode(std::span<const int> dims, std::span<const int> coords) {
  int v = 0;
  for (size_t i = 0; i < dims.size(); ++i) v = v * dims[i] + coords[i];
  return v;
}

void Decode(std::span<const int> dims, int v, std::vector<int>& coords) {
  coords.resize(dims.size());
  for (size_t i = dims.size(); i-- > 0;) {
    coords[i] = v % dims[i];
    v /= dims[i];
  }
}

// Axis permutations that only move axes inside runs of equal adjacent sizes.
std::vector<std::vector<int>> FactorPermutations(std::span<const int> dims) {
  const int k = static_cast<int>(dims.size());
  std::vector<int> run(k);
  for (int i = 0; i < k; ++i) {
    run[i] = (i > 0 && dims[i] == dims[i - 1]) ? run[i - 1] : i;
  }
  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) ok = run[sigma[i]] == run[i];
    if (ok) out.push_back(sigma);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

std::vector<std::vector<int>> AllPermutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

SymmetryGroup RookSymmetry(std::span<const int> dims) {
  if (dims.size() < 2) Fail(ErrorCode::kInvalidSize, "rook dims need two factors");
  for (int d : dims) {
    if (d < 2) Fail(ErrorCode::kInvalidSize, "rook factors must have size >= 2");
  }
  const int n = Product(dims);
  if (n > kMaxVertices) Fail(ErrorCode::kInvalidSize, "rook graph too large");
  SymmetryGroup group;
  group.dims.assign(dims.begin(), dims.end());
  std::vector<int> coords;
  for (size_t axis = 0; axis < dims.size(); ++axis) {
    for (int j = 0; j + 1 < dims[axis]; ++j) {
      Permutation p(n);
      for (int v = 0; v < n; ++v) {
        Decode(dims, v, coords);
        if (coords[axis] == j) {
          coords[axis] = j + 1;
        } else if (coords[axis] == j + 1) {
          coords[axis] = j;
        }
        p[v] = Encode(dims, coords);
      }
      group.generators.push_back(std::move(p));
    }
  }
  for (size_t axis = 0; axis + 1 < dims.size(); ++axis) {
    if (dims[axis] != dims[axis + 1]) continue;
    Permutation p(n);
    for (int v = 0; v < n; ++v) {
      Decode(dims, v, coords);
      std::swap(coords[axis], coords[axis + 1]);
      p[v] = Encode(dims, coords);
    }
    group.generators.push_back(std::move(p));
  }
  return group;
}

bool IsAutomorphism(const MultiGraph& g, const Permutation& p) {
  const int n = g.vertex_count();
  if (p.size() != static_cast<size_t>(n)) return false;
  std::vector<char> hit(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || hit[v]) return false;
    hit[v] = 1;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (g.multiplicity(u, v) != g.multiplicity(p[u], p[v])) return false;
    }
  }
  return true;
}

Divisor Permute(const Divisor& d, const Permutation& p) {
  Divisor out(d.size());
  for (size_t v = 0; v < d.size(); ++v) out[p[v]] = d[v];
  return out;
}

VertexMask Permute(VertexMask s, const Permutation& p) {
  VertexMask out = 0;
  for (; s != 0; s &= s - 1) out |= Bit(p[Lowest(s)]);
  return out;
}

std::vector<Permutation> EnumerateGroup(const SymmetryGroup& group, size_t limit) {
  if (group.generators.empty()) return {};
  const size_t n = group.generators.front().size();
  Permutation identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::set<Permutation> seen{identity};
  std::vector<Permutation> frontier{identity};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const Permutation& p : frontier) {
      for (const Permutation& gen : group.generators) {
        Permutation q(n);
        for (size_t v = 0; v < n; ++v) q[v] = gen[p[v]];
        if (seen.insert(q).second) {
          if (seen.size() > limit) {
            Fail(ErrorCode::kInvalidSize,
                 "group has more than " + std::to_string(limit) + " elements");
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

DivisorCanonizer::DivisorCanonizer(const SymmetryGroup& group) {
  if (group.dims.empty()) {
    elements_ = EnumerateGroup(group);
    vertex_count_ = elements_.empty() ? 0 : static_cast<int>(elements_.front().size());
    return;
  }
  const std::vector<int>& dims = group.dims;
  const int k = static_cast<int>(dims.size());
  vertex_count_ = Product(dims);
  fibre_ = dims.back();
  rows_ = vertex_count_ / fibre_;

  std::vector<std::vector<std::vector<int>>> axis_perms;
  for (int i = 0; i + 1 < k; ++i) axis_perms.push_back(AllPermutations(dims[i]));

  std::vector<int> y;
  std::vector<int> x(k);
  for (const std::vector<int>& sigma : FactorPermutations(dims)) {
    std::vector<size_t> choice(k - 1, 0);
    for (;;) {
      std::vector<int> sources(vertex_count_);
      for (int pos = 0; pos < vertex_count_; ++pos) {
        Decode(dims, pos, y);
        for (int i = 0; i + 1 < k; ++i) x[sigma[i]] = axis_perms[i][choice[i]][y[i]];
        x[sigma[k - 1]] = y[k - 1];
        sources[pos] = Encode(dims, x);
      }
      arrangements_.push_back(std::move(sources));
      int i = k - 2;
      while (i >= 0 && ++choice[i] == axis_perms[i].size()) choice[i--] = 0;
      if (i < 0) break;
    }
  }
}

void DivisorCanonizer::Image(const std::vector<int>& sources, const Divisor& d,
                             std::vector<int>& scratch, Divisor& out) const {
  scratch.resize(fibre_);
  std::iota(scratch.begin(), scratch.end(), 0);
  std::sort(scratch.begin(), scratch.end(), [&](int a, int b) {
    for (int r = 0; r < rows_; ++r) {
      const int va = d[sources[r * fibre_ + a]];
      const int vb = d[sources[r * fibre_ + b]];
      if (va != vb) return va < vb;
    }
    return false;
  });
  out.resize(vertex_count_);
  for (int r = 0; r < rows_; ++r) {
    for (int j = 0; j < fibre_; ++j) out[r * fibre_ + j] = d[sources[r * fibre_ + scratch[j]]];
  }
}

Divisor DivisorCanonizer::Canonical(const Divisor& d) const {
  if (d.size() != static_cast<size_t>(vertex_count_)) {
    Fail(ErrorCode::kInvalidArgument, "divisor length does not match the group");
  }
  Divisor best = d;
  if (!elements_.empty()) {
    for (const Permutation& p : elements_) best = std::min(best, Permute(d, p));
    return best;
  }
  std::vector<int> scratch;
  Divisor image;
  for (const std::vector<int>& sources : arrangements_) {
    Image(sources, d, scratch, image);
    if (image < best) best = image;
  }
  return best;
}

bool DivisorCanonizer::IsCanonical(const Divisor& d) const {
  if (!elements_.empty()) return Canonical(d) == d;
  std::vector<int> scratch;
  std::vector<int> head(fibre_);
  Divisor image;
  for (const std::vector<int>& sources : arrangements_) {
    // The first row of the image is the sorted first source row; most
    // arrangements are decided by it alone.
    for (int j = 0; j < fibre_; ++j) head[j] = d[sources[j]];
    std::sort(head.begin(), head.end());
    const auto cmp = std::lexicographical_compare_three_way(
        head.begin(), head.end(), d.begin(), d.begin() + fibre_);
    if (cmp < 0) return false;
    if (cmp > 0) continue;
    Image(sources, d, scratch, image);
    if (image < d) return false;
  }
  return true;
}

Divisor CanonicalDivisorForm(const Divisor& d, const SymmetryGroup& group) {
  return DivisorCanonizer(group).Canonical(d);
}

}  // namespace rookgon

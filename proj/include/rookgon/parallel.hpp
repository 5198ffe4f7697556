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

#ifndef ROOKGON_PARALLEL_HPP_
#define ROOKGON_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace rookgon {

// Runs fn(worker, begin, end) over `count` items split into contiguous
// slices, one per worker. With a single worker no thread is spawned.
template <typename Fn>
void ParallelSlices(size_t count, int workers, Fn&& fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<size_t>(count, 1))));
  if (workers == 1) {
    fn(0, size_t{0}, count);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const size_t step = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const size_t begin = std::min(count, w * step);
    const size_t end = std::min(count, begin + step);
    pool.emplace_back([&fn, w, begin, end] { fn(w, begin, end); });
  }
}

}  // namespace rookgon

#endif  // ROOKGON_PARALLEL_HPP_

// Copyright 2026 The grapheq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GRAPHEQ_PARALLEL_H_
#define GRAPHEQ_PARALLEL_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace grapheq {

// Worker count: explicit request, else GRAPHEQ_THREADS, else hardware.
int resolve_threads(int requested);

// Runs fn(begin, end, chunk_index) over `chunks` contiguous slices of
// [0, count). Results written per chunk stay in chunk order, so callers that
// concatenate them get output independent of the worker count.
template <typename Fn>
void parallel_chunks(std::uint64_t count, int threads, Fn&& fn) {
  const int workers = std::max(1, std::min<int>(resolve_threads(threads),
                                                static_cast<int>(std::max<std::uint64_t>(count, 1))));
  if (workers == 1) {
    fn(std::uint64_t{0}, count, 0);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  const std::uint64_t step = (count + static_cast<std::uint64_t>(workers) - 1) /
                             static_cast<std::uint64_t>(workers);
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min(count, step * static_cast<std::uint64_t>(w));
    const std::uint64_t end = std::min(count, begin + step);
    pool.emplace_back([&, begin, end, w] {
      try {
        fn(begin, end, w);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline int chunk_count(std::uint64_t count, int threads) {
  return std::max(1, std::min<int>(resolve_threads(threads),
                                   static_cast<int>(std::max<std::uint64_t>(count, 1))));
}

}  // namespace grapheq

#endif  // GRAPHEQ_PARALLEL_H_

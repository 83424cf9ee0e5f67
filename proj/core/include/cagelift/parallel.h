// Copyright 2026 The Cagelift Authors
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

#ifndef CAGELIFT_PARALLEL_H_
#define CAGELIFT_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace cagelift {

// Worker count for analysis loops: the CAGELIFT_THREADS environment variable
// when set to a positive integer, otherwise the hardware concurrency.
int ThreadCount();

namespace internal {
// Set inside ParallelFor workers so nested loops run inline.
inline thread_local bool in_parallel_region = false;
}  // namespace internal

// Runs body(i) for i in [0, n) across ThreadCount() workers using a strided
// partition. The body must only write to per-index state; results are then
// independent of scheduling. The first exception thrown is rethrown.
template <typename Body>
void ParallelFor(int n, Body&& body) {
  const int workers = std::min(ThreadCount(), n);
  if (workers <= 1 || internal::in_parallel_region) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      internal::in_parallel_region = true;
      try {
        for (int i = w; i < n; i += workers) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cagelift

#endif  // CAGELIFT_PARALLEL_H_

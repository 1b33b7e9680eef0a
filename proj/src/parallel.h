// Copyright 2026 The dpcover Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DPCOVER_SRC_PARALLEL_H_
#define DPCOVER_SRC_PARALLEL_H_

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "dpcover/types.h"

namespace dpcover {

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads in
// contiguous chunks. Each index must write only its own output slot; results
// are then independent of scheduling. The first exception is rethrown.
template <typename Fn>
void parallel_for(Index count, Fn&& fn) {
  const Index workers = std::min<Index>(
      count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (Index i = 0; i < count; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(static_cast<std::size_t>(workers));
  const Index chunk = (count + workers - 1) / workers;
  for (Index w = 0; w < workers; ++w) {
    const Index begin = w * chunk;
    const Index end = std::min(count, begin + chunk);
    threads.emplace_back([&, begin, end] {
      try {
        for (Index i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace dpcover

#endif  // DPCOVER_SRC_PARALLEL_H_

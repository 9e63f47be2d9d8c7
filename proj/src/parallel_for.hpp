// Copyright 2026-present the navgraph authors
//
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

#pragma once

#include <atomic>
#include <cstdint>
#include <exception>

namespace navgraph::detail {

// Parallel loop over [0, count). The body must write only to slots owned by
// its own index, so the result is independent of scheduling. Exceptions are
// captured and rethrown after the join (throwing across an OpenMP region is
// undefined behavior).
template <class F>
void parallel_for(std::int64_t count, F&& body) {
  std::atomic<bool> failed{false};
  std::exception_ptr eptr = nullptr;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::int64_t i = 0; i < count; ++i) {
    if (failed.load(std::memory_order_relaxed)) continue;
    try {
      body(i);
    } catch (...) {
#ifdef _OPENMP
#pragma omp critical(navgraph_parallel_for_error)
#endif
      {
        if (!failed.exchange(true)) eptr = std::current_exception();
      }
    }
  }
  if (eptr) std::rethrow_exception(eptr);
}

}  // namespace navgraph::detail

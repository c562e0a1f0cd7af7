// Copyright 2026 The itemnet Authors.
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

#ifndef ITEMNET_PARALLEL_HPP_
#define ITEMNET_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace itemnet {

/// Process-wide worker count; read from ITEMNET_WORKERS on first use, default 1.
std::size_t worker_count();
void set_worker_count(std::size_t workers);

/**
 * Runs fn(i) for i in [0, count) on up to worker_count() threads using a static
 * block schedule. fn must only write to per-index state so the result does not
 * depend on scheduling. The first exception thrown by any worker is rethrown.
 */
template <typename Fn>
void parallel_for(std::size_t count, Fn &&fn) {
    const std::size_t workers = std::min(worker_count(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            fn(i);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_lock;
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                for (std::size_t i = w; i < count; i += workers)
                    fn(i);
            } catch (...) {
                std::lock_guard guard(failure_lock);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    threads.clear();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace itemnet

#endif // ITEMNET_PARALLEL_HPP_

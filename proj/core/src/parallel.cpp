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

#include "itemnet/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace itemnet {

namespace {

std::size_t workers_from_env() {
    const char *value = std::getenv("ITEMNET_WORKERS");
    if (value == nullptr)
        return 1;
    try {
        long parsed = std::stol(value);
        return parsed > 0 ? static_cast<std::size_t>(parsed) : 1;
    } catch (...) {
        return 1;
    }
}

std::atomic<std::size_t> &workers_slot() {
    static std::atomic<std::size_t> slot{workers_from_env()};
    return slot;
}

} // namespace

std::size_t worker_count() { return workers_slot().load(); }

void set_worker_count(std::size_t workers) { workers_slot().store(workers == 0 ? 1 : workers); }

} // namespace itemnet

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

#ifndef ITEMNET_BENCH_GRAPHS_HPP_
#define ITEMNET_BENCH_GRAPHS_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "itemnet/graph.hpp"

namespace itemnet::bench {

inline std::vector<std::string> numbered(std::size_t n, const char *prefix) {
    std::vector<std::string> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

// Planted partition: `groups` blocks of equal size, dense inside, sparse across.
inline Graph planted_graph(std::size_t n, std::size_t groups, double p_in, double p_out, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng) < (u % groups == v % groups ? p_in : p_out))
                edges.push_back({u, v, 1.0});
    return Graph(numbered(n, "n"), edges);
}

} // namespace itemnet::bench

#endif

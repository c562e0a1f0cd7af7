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

// Clauset-Newman-Moore greedy agglomeration: repeatedly join the pair of
// adjacent communities with the largest modularity gain
//   dQ = 2 (e_ij - a_i a_j),
// and keep the partition with the highest modularity seen along the way.

#include <map>
#include <set>

#include "algorithms.hpp"

namespace itemnet::community {

std::vector<std::size_t> fast_greedy(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    const double two_m = 2.0 * graph.total_weight();
    if (two_m == 0.0)
        return replay_merges(n, {}, 0);

    // e[i][j]: fraction of edge ends joining community i to j (one direction).
    std::vector<std::map<std::size_t, double>> e(n);
    std::vector<double> a(n);
    std::vector<bool> alive(n, true);
    double q = 0.0;
    for (node_index v = 0; v < n; ++v) {
        a[v] = graph.strength(v) / two_m;
        q -= a[v] * a[v];
        for (const Neighbor &nb : graph.neighbors(v))
            e[v][nb.node] = nb.weight / two_m;
    }

    // Ordered by (-dQ, i, j) so the first element is the best merge with a
    // deterministic tie-break.
    using Key = std::tuple<double, std::size_t, std::size_t>;
    std::set<Key> heap;
    auto key = [&](std::size_t i, std::size_t j) {
        if (i > j)
            std::swap(i, j);
        return Key{-2.0 * (e[i].at(j) - a[i] * a[j]), i, j};
    };
    for (std::size_t i = 0; i < n; ++i)
        for (const auto &[j, w] : e[i])
            if (i < j)
                heap.insert(key(i, j));

    std::vector<std::pair<std::size_t, std::size_t>> merges;
    double best_q = q;
    std::size_t best_steps = 0;
    while (!heap.empty()) {
        auto [neg_dq, i, j] = *heap.begin();
        // Drop every pair touching i or j before the maps change.
        for (const auto &[k, w] : e[i])
            heap.erase(key(i, k));
        for (const auto &[k, w] : e[j])
            if (k != i)
                heap.erase(key(j, k));

        // Fold j into i.
        for (const auto &[k, w] : e[j]) {
            if (k == i)
                continue;
            e[i][k] += w;
            e[k][i] += w;
            e[k].erase(j);
        }
        e[i].erase(j);
        e[j].clear();
        a[i] += a[j];
        alive[j] = false;
        q -= neg_dq;
        merges.emplace_back(i, j);
        if (q > best_q + 1e-12) {
            best_q = q;
            best_steps = merges.size();
        }
        for (const auto &[k, w] : e[i])
            heap.insert(key(i, k));
    }
    return replay_merges(n, merges, best_steps);
}

} // namespace itemnet::community

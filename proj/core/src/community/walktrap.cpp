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

// Walktrap (Pons & Latapy). Communities are compared through their t-step
// random-walk distributions P^t_C. Every vertex carries a loop whose weight is
// its mean incident weight. Adjacent communities with the smallest
//   dsigma = (1/n) |C1||C2| / (|C1|+|C2|) * sum_k (P_C1k - P_C2k)^2 / d(k)
// are merged; the level with the highest modularity (on the loop-free graph)
// is returned.

#include <map>
#include <set>

#include "algorithms.hpp"
#include "itemnet/parallel.hpp"

namespace itemnet::community {

std::vector<std::size_t> walktrap(const Graph &graph, const DetectOptions &options) {
    const std::size_t n = graph.num_nodes();
    const double m = graph.total_weight();
    if (m == 0.0)
        return replay_merges(n, {}, 0);

    std::vector<double> loop(n), d(n);
    for (node_index v = 0; v < n; ++v) {
        loop[v] = graph.degree(v) > 0 ? graph.strength(v) / static_cast<double>(graph.degree(v)) : 1.0;
        d[v] = graph.strength(v) + loop[v];
    }

    // Row v of P^t, by t sparse steps of x <- x D^{-1} A.
    std::vector<std::vector<double>> dist(n);
    parallel_for(n, [&](std::size_t v) {
        std::vector<double> x(n, 0.0), y(n);
        x[v] = 1.0;
        for (std::size_t step = 0; step < options.walktrap_steps; ++step) {
            std::fill(y.begin(), y.end(), 0.0);
            for (node_index u = 0; u < n; ++u) {
                if (x[u] == 0.0)
                    continue;
                const double share = x[u] / d[u];
                y[u] += share * loop[u];
                for (const Neighbor &nb : graph.neighbors(u))
                    y[nb.node] += share * nb.weight;
            }
            std::swap(x, y);
        }
        dist[v] = std::move(x);
    });

    std::vector<std::size_t> size(n, 1);
    auto delta_sigma = [&](std::size_t c1, std::size_t c2) {
        double r2 = 0.0;
        const auto &p1 = dist[c1];
        const auto &p2 = dist[c2];
        for (std::size_t k = 0; k < n; ++k) {
            const double diff = p1[k] - p2[k];
            r2 += diff * diff / d[k];
        }
        const double s1 = static_cast<double>(size[c1]);
        const double s2 = static_cast<double>(size[c2]);
        return (s1 * s2 / (s1 + s2)) * r2 / static_cast<double>(n);
    };

    // Community adjacency: neighbour -> (connecting weight, dsigma).
    struct Link {
        double weight = 0.0;
        double delta = 0.0;
    };
    std::vector<std::map<std::size_t, Link>> links(n);
    using Key = std::tuple<double, std::size_t, std::size_t>;
    std::set<Key> queue;
    for (node_index u = 0; u < n; ++u) {
        for (const Neighbor &nb : graph.neighbors(u)) {
            if (u < nb.node) {
                const double ds = delta_sigma(u, nb.node);
                links[u][nb.node] = {nb.weight, ds};
                links[nb.node][u] = {nb.weight, ds};
                queue.insert({ds, u, nb.node});
            }
        }
    }

    std::vector<double> total(n);
    double q = 0.0;
    for (node_index v = 0; v < n; ++v) {
        total[v] = graph.strength(v);
        q -= (total[v] / (2.0 * m)) * (total[v] / (2.0 * m));
    }

    std::vector<std::pair<std::size_t, std::size_t>> merges;
    double best_q = q;
    std::size_t best_steps = 0;
    while (!queue.empty()) {
        auto [ds, c1, c2] = *queue.begin();
        for (const auto &[k, link] : links[c1])
            queue.erase({link.delta, std::min(c1, k), std::max(c1, k)});
        for (const auto &[k, link] : links[c2])
            queue.erase({link.delta, std::min(c2, k), std::max(c2, k)});

        const double joining = links[c1].at(c2).weight;
        const double a1 = total[c1] / (2.0 * m);
        const double a2 = total[c2] / (2.0 * m);
        q += joining / m - 2.0 * a1 * a2;
        total[c1] += total[c2];

        const double s1 = static_cast<double>(size[c1]);
        const double s2 = static_cast<double>(size[c2]);
        for (std::size_t k = 0; k < n; ++k)
            dist[c1][k] = (s1 * dist[c1][k] + s2 * dist[c2][k]) / (s1 + s2);
        size[c1] += size[c2];
        dist[c2].clear();
        dist[c2].shrink_to_fit();

        for (const auto &[k, link] : links[c2]) {
            if (k == c1)
                continue;
            links[c1][k].weight += link.weight;
            links[k].erase(c2);
        }
        links[c1].erase(c2);
        links[c2].clear();
        for (auto &[k, link] : links[c1]) {
            link.delta = delta_sigma(c1, k);
            links[k][c1] = link;
            queue.insert({link.delta, std::min(c1, k), std::max(c1, k)});
        }

        merges.emplace_back(c1, c2);
        if (q > best_q + 1e-12) {
            best_q = q;
            best_steps = merges.size();
        }
    }
    return replay_merges(n, merges, best_steps);
}

} // namespace itemnet::community

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

// Multi-level modularity optimisation (Blondel et al.): greedy local moves in a
// seeded random node order, then aggregation of communities into super-nodes.

#include <map>
#include <numeric>

#include "algorithms.hpp"
#include "itemnet/random.hpp"

namespace itemnet::community {

namespace {

struct Level {
    // adjacency without self-loops; self_weight holds loop weight (counted once)
    std::vector<std::vector<std::pair<std::size_t, double>>> adj;
    std::vector<double> self_weight;

    std::size_t size() const { return adj.size(); }
    double degree(std::size_t v) const {
        double k = 2.0 * self_weight[v];
        for (const auto &[u, w] : adj[v])
            k += w;
        return k;
    }
};

// Returns true if any node moved. `community` is updated in place.
bool move_nodes(const Level &level, std::vector<std::size_t> &community, double two_m, Rng &rng,
                std::size_t max_passes) {
    const std::size_t n = level.size();
    std::vector<double> k(n), tot(n, 0.0);
    for (std::size_t v = 0; v < n; ++v) {
        k[v] = level.degree(v);
        tot[community[v]] += k[v];
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);

    std::vector<double> link(n, 0.0);
    std::vector<std::size_t> touched;
    bool any_move = false;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        bool moved = false;
        for (std::size_t v : order) {
            const std::size_t own = community[v];
            touched.clear();
            for (const auto &[u, w] : level.adj[v]) {
                const std::size_t c = community[u];
                if (link[c] == 0.0)
                    touched.push_back(c);
                link[c] += w;
            }
            tot[own] -= k[v];
            // Gain of joining c relative to staying isolated: link_c - tot_c k_v / 2m.
            std::size_t best = own;
            double best_gain = link[own] - tot[own] * k[v] / two_m;
            for (std::size_t c : touched) {
                const double gain = link[c] - tot[c] * k[v] / two_m;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best = c;
                }
            }
            tot[best] += k[v];
            if (best != own) {
                community[v] = best;
                moved = true;
                any_move = true;
            }
            for (std::size_t c : touched)
                link[c] = 0.0;
            link[own] = 0.0;
        }
        if (!moved)
            break;
    }
    return any_move;
}

} // namespace

std::vector<std::size_t> louvain(const Graph &graph, const DetectOptions &options) {
    const std::size_t n = graph.num_nodes();
    Level level;
    level.adj.resize(n);
    level.self_weight.assign(n, 0.0);
    for (node_index v = 0; v < n; ++v)
        for (const Neighbor &nb : graph.neighbors(v))
            level.adj[v].push_back({nb.node, nb.weight});
    const double two_m = 2.0 * graph.total_weight();

    std::vector<std::size_t> membership(n);
    std::iota(membership.begin(), membership.end(), 0);
    if (two_m == 0.0)
        return membership;

    Rng rng(substream_seed(options.seed, fnv1a("louvain")));
    while (true) {
        std::vector<std::size_t> community(level.size());
        std::iota(community.begin(), community.end(), 0);
        if (!move_nodes(level, community, two_m, rng, options.louvain_max_passes))
            break;
        // Compact community ids in order of first appearance.
        std::vector<std::size_t> remap(level.size(), SIZE_MAX);
        std::size_t next = 0;
        for (std::size_t v = 0; v < level.size(); ++v)
            if (remap[community[v]] == SIZE_MAX)
                remap[community[v]] = next++;
        for (auto &c : membership)
            c = remap[community[c]];

        Level coarse;
        coarse.adj.resize(next);
        coarse.self_weight.assign(next, 0.0);
        std::vector<std::map<std::size_t, double>> links(next);
        for (std::size_t v = 0; v < level.size(); ++v) {
            const std::size_t cv = remap[community[v]];
            coarse.self_weight[cv] += level.self_weight[v];
            for (const auto &[u, w] : level.adj[v]) {
                const std::size_t cu = remap[community[u]];
                if (cu == cv) {
                    if (v < u)
                        coarse.self_weight[cv] += w;
                } else {
                    links[cv][cu] += w;
                }
            }
        }
        for (std::size_t c = 0; c < next; ++c)
            for (const auto &[d, w] : links[c])
                coarse.adj[c].push_back({d, w});
        if (next == level.size())
            break;
        level = std::move(coarse);
    }
    return membership;
}

} // namespace itemnet::community

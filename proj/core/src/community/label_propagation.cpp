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

#include <map>
#include <numeric>

#include "algorithms.hpp"
#include "itemnet/random.hpp"

namespace itemnet::community {

// Each node adopts the label carrying the largest incident weight; ties go to
// the current label, then the lowest label. Nodes are visited in a fresh seeded order every pass and
// the run stops after a pass without changes.
std::vector<std::size_t> label_propagation(const Graph &graph, const DetectOptions &options) {
    const std::size_t n = graph.num_nodes();
    std::vector<std::size_t> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng rng(substream_seed(options.seed, fnv1a("label-propagation")));

    std::map<std::size_t, double> tally;
    for (std::size_t pass = 0; pass < options.label_propagation_max_passes; ++pass) {
        shuffle(order, rng);
        bool changed = false;
        for (std::size_t v : order) {
            if (graph.degree(v) == 0)
                continue;
            tally.clear();
            for (const Neighbor &nb : graph.neighbors(v))
                tally[label[nb.node]] += nb.weight;
            double best_weight = -1.0;
            std::size_t best = label[v];
            for (const auto &[l, w] : tally) {
                if (w > best_weight + 1e-12) {
                    best_weight = w;
                    best = l;
                }
            }
            // Keep the current label when it is tied with the winner.
            if (tally[label[v]] >= best_weight - 1e-12)
                best = label[v];
            if (best != label[v]) {
                label[v] = best;
                changed = true;
            }
        }
        if (!changed)
            break;
    }
    return label;
}

} // namespace itemnet::community

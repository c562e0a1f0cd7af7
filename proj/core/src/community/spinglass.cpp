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

// Spinglass community detection: simulated annealing of the Reichardt-Bornholdt
// Potts Hamiltonian
//   H = - sum_{i<j} (A_ij - gamma k_i k_j / 2m) delta(s_i, s_j)
// with at most `spins` states. The start temperature is raised until spins
// flip almost freely, then single-spin heat-bath sweeps are applied while the
// temperature cools geometrically; energies are measured in
// units of the mean edge weight so the temperature schedule does not depend on
// the weight scale. A zero-temperature greedy polish and pairwise merging of
// spin states follow the anneal.

#include <algorithm>
#include <cmath>

#include "algorithms.hpp"
#include "itemnet/error.hpp"
#include "itemnet/random.hpp"

namespace itemnet::community {

namespace {

// The null-model term uses the whole graph's total weight so that annealing
// components separately still optimizes the modularity of the full graph.
std::vector<std::size_t> anneal_component(const Graph &graph, const std::vector<node_index> &nodes,
                                          const SpinglassOptions &opt, Rng &rng) {
    const std::size_t n = nodes.size();
    std::vector<std::size_t> spin(n, 0);
    if (n == 1)
        return spin;

    std::vector<std::size_t> local(graph.num_nodes(), SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i)
        local[nodes[i]] = i;
    std::vector<double> k(n);
    for (std::size_t i = 0; i < n; ++i)
        k[i] = graph.strength(nodes[i]);
    const double two_m = 2.0 * graph.total_weight();
    const double unit = graph.total_weight() / static_cast<double>(graph.num_edges());

    const std::size_t q = std::max<std::size_t>(1, std::min(opt.spins, n));
    std::vector<double> spin_total(q, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        spin[i] = static_cast<std::size_t>(uniform_below(rng, q));
        spin_total[spin[i]] += k[i];
    }

    std::vector<double> link(q), energy(q), weight(q);
    // Energy change (in weight units) of placing node i into each spin state,
    // relative to leaving it unassigned.
    auto local_energies = [&](std::size_t i) {
        std::fill(link.begin(), link.end(), 0.0);
        for (const Neighbor &nb : graph.neighbors(nodes[i]))
            link[spin[local[nb.node]]] += nb.weight;
        spin_total[spin[i]] -= k[i];
        for (std::size_t s = 0; s < q; ++s)
            energy[s] = -(link[s] - opt.gamma * k[i] * spin_total[s] / two_m) / unit;
    };

    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;

    // One heat-bath sweep of n random single-spin updates; returns the
    // fraction of updates that changed a spin.
    auto sweep = [&](double temperature) {
        std::size_t changes = 0;
        for (std::size_t step = 0; step < n; ++step) {
            const std::size_t i = static_cast<std::size_t>(uniform_below(rng, n));
            const std::size_t before = spin[i];
            local_energies(i);
            const double lowest = *std::min_element(energy.begin(), energy.end());
            double norm = 0.0;
            for (std::size_t s = 0; s < q; ++s) {
                weight[s] = std::exp(-(energy[s] - lowest) / temperature);
                norm += weight[s];
            }
            double r = uniform_unit(rng) * norm;
            std::size_t chosen = q - 1;
            for (std::size_t s = 0; s < q; ++s) {
                r -= weight[s];
                if (r < 0.0) {
                    chosen = s;
                    break;
                }
            }
            spin[i] = chosen;
            spin_total[chosen] += k[i];
            changes += chosen != before;
        }
        return static_cast<double>(changes) / static_cast<double>(n);
    };

    // Heat from the configured start until the system is close to disordered,
    // so the anneal begins above the transition whatever the graph.
    double temperature = opt.start_temperature;
    const double disordered = 0.95 * (1.0 - 1.0 / static_cast<double>(q));
    for (int k_heat = 0; k_heat < 200 && sweep(temperature) < disordered; ++k_heat)
        temperature *= 1.1;

    for (; temperature > opt.stop_temperature; temperature *= opt.cooling_factor)
        for (std::size_t s = 0; s < opt.sweeps_per_temperature; ++s)
            sweep(temperature);

    // Zero-temperature polish: strict improvements only, so it terminates.
    auto polish = [&] {
        for (std::size_t pass = 0; pass < 100; ++pass) {
            bool changed = false;
            for (std::size_t i : order) {
                const std::size_t current = spin[i];
                local_energies(i);
                std::size_t best = current;
                for (std::size_t s = 0; s < q; ++s)
                    if (energy[s] < energy[best] - 1e-12)
                        best = s;
                spin[i] = best;
                spin_total[best] += k[i];
                changed = changed || best != current;
            }
            if (!changed)
                break;
        }
    };
    polish();

    // Single-spin moves cannot join two whole communities, so merge spin
    // states pairwise while that lowers the energy, then polish again.
    for (;;) {
        std::vector<std::vector<double>> between(q, std::vector<double>(q, 0.0));
        std::vector<std::size_t> members(q, 0);
        for (std::size_t i = 0; i < n; ++i)
            ++members[spin[i]];
        for (std::size_t i = 0; i < n; ++i)
            for (const Neighbor &nb : graph.neighbors(nodes[i]))
                between[spin[i]][spin[local[nb.node]]] += nb.weight;
        double best_gain = 1e-12;
        std::size_t keep = q, drop = q;
        for (std::size_t a = 0; a < q; ++a) {
            for (std::size_t b = a + 1; b < q; ++b) {
                if (members[a] == 0 || members[b] == 0)
                    continue;
                const double gain = (between[a][b] - opt.gamma * spin_total[a] * spin_total[b] / two_m) / unit;
                if (gain > best_gain) {
                    best_gain = gain;
                    keep = a;
                    drop = b;
                }
            }
        }
        if (keep == q)
            break;
        for (std::size_t i = 0; i < n; ++i)
            if (spin[i] == drop)
                spin[i] = keep;
        spin_total[keep] += spin_total[drop];
        spin_total[drop] = 0.0;
        polish();
    }
    return spin;
}

} // namespace

std::vector<std::size_t> spinglass(const Graph &graph, const DetectOptions &options) {
    const SpinglassOptions &opt = options.spinglass;
    if (!(opt.cooling_factor > 0.0 && opt.cooling_factor < 1.0) || !(opt.start_temperature > opt.stop_temperature) ||
        !(opt.stop_temperature > 0.0) || opt.spins == 0)
        throw Error(Errc::OutOfRange, "invalid spinglass schedule");

    std::size_t count = 0;
    const auto component = connected_components(graph, &count);
    if (count > 1 && !opt.per_component)
        throw Error(Errc::DisconnectedInput, "spinglass needs a connected graph (per-component mode is off)");

    std::vector<std::vector<node_index>> groups(count);
    for (node_index v = 0; v < graph.num_nodes(); ++v)
        groups[component[v]].push_back(v);

    std::vector<std::size_t> label(graph.num_nodes(), 0);
    std::size_t offset = 0;
    for (std::size_t c = 0; c < count; ++c) {
        Rng rng(substream_seed(options.seed, fnv1a("spinglass") ^ static_cast<std::uint64_t>(c)));
        const auto spins = anneal_component(graph, groups[c], opt, rng);
        std::size_t used = 0;
        for (std::size_t i = 0; i < groups[c].size(); ++i) {
            label[groups[c][i]] = offset + spins[i];
            used = std::max(used, spins[i] + 1);
        }
        offset += used;
    }
    return label;
}

} // namespace itemnet::community

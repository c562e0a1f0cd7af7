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

// Girvan-Newman divisive clustering. The edge with the highest shortest-path
// betweenness (hop counts, Brandes accumulation) is removed; betweenness is
// recomputed only inside the components touched by the removal. Each time the
// graph splits, the component partition is scored on the original weighted
// graph and the best one is kept. Cost is O(m * n_c * m_c), so this method is
// only practical for graphs of a few thousand edges.

#include <queue>

#include "algorithms.hpp"

namespace itemnet::community {

namespace {

struct Incidence {
    std::size_t node;
    std::size_t edge;
};

class Divider {
public:
    explicit Divider(const Graph &graph) : graph_(graph), n_(graph.num_nodes()) {
        edges_ = graph.edges();
        adjacency_.resize(n_);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            adjacency_[edges_[e].u].push_back({edges_[e].v, e});
            adjacency_[edges_[e].v].push_back({edges_[e].u, e});
        }
        removed_.assign(edges_.size(), false);
        betweenness_.assign(edges_.size(), 0.0);
        dist_.assign(n_, -1);
        sigma_.assign(n_, 0.0);
        delta_.assign(n_, 0.0);
        component_.assign(n_, 0);
    }

    std::vector<std::size_t> run() {
        std::size_t components = relabel_components();
        std::vector<std::size_t> best = component_;
        double best_q = score();
        for (std::size_t c = 0; c < components; ++c)
            recompute(members_of(c));

        for (std::size_t left = edges_.size(); left > 0; --left) {
            std::size_t pick = edges_.size();
            double top = -1.0;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (!removed_[e] && betweenness_[e] > top + 1e-9 * std::max(1.0, top)) {
                    top = betweenness_[e];
                    pick = e;
                }
            }
            removed_[pick] = true;
            const std::size_t before = components;
            components = relabel_components();
            const std::size_t cu = component_[edges_[pick].u];
            const std::size_t cv = component_[edges_[pick].v];
            recompute(members_of(cu));
            if (cv != cu)
                recompute(members_of(cv));
            if (components != before) {
                const double q = score();
                if (q > best_q + 1e-12) {
                    best_q = q;
                    best = component_;
                }
            }
        }
        return best;
    }

private:
    std::size_t relabel_components() {
        std::fill(component_.begin(), component_.end(), SIZE_MAX);
        std::size_t next = 0;
        std::vector<std::size_t> stack;
        for (std::size_t s = 0; s < n_; ++s) {
            if (component_[s] != SIZE_MAX)
                continue;
            component_[s] = next;
            stack.push_back(s);
            while (!stack.empty()) {
                std::size_t v = stack.back();
                stack.pop_back();
                for (const Incidence &inc : adjacency_[v]) {
                    if (!removed_[inc.edge] && component_[inc.node] == SIZE_MAX) {
                        component_[inc.node] = next;
                        stack.push_back(inc.node);
                    }
                }
            }
            ++next;
        }
        return next;
    }

    std::vector<std::size_t> members_of(std::size_t c) const {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n_; ++v)
            if (component_[v] == c)
                out.push_back(v);
        return out;
    }

    double score() const {
        const double m = graph_.total_weight();
        std::vector<double> internal(n_, 0.0), total(n_, 0.0);
        for (std::size_t v = 0; v < n_; ++v)
            total[component_[v]] += graph_.strength(v);
        for (const Edge &e : edges_)
            if (component_[e.u] == component_[e.v])
                internal[component_[e.u]] += e.weight;
        double q = 0.0;
        for (std::size_t c = 0; c < n_; ++c)
            q += internal[c] / m - (total[c] / (2.0 * m)) * (total[c] / (2.0 * m));
        return q;
    }

    // Brandes accumulation restricted to one component (edges within it only).
    void recompute(const std::vector<std::size_t> &nodes) {
        for (std::size_t v : nodes)
            for (const Incidence &inc : adjacency_[v])
                betweenness_[inc.edge] = 0.0;
        std::vector<std::size_t> order;
        order.reserve(nodes.size());
        std::queue<std::size_t> frontier;
        for (std::size_t s : nodes) {
            for (std::size_t v : nodes) {
                dist_[v] = -1;
                sigma_[v] = 0.0;
                delta_[v] = 0.0;
            }
            order.clear();
            dist_[s] = 0;
            sigma_[s] = 1.0;
            frontier.push(s);
            while (!frontier.empty()) {
                std::size_t v = frontier.front();
                frontier.pop();
                order.push_back(v);
                for (const Incidence &inc : adjacency_[v]) {
                    if (removed_[inc.edge])
                        continue;
                    if (dist_[inc.node] < 0) {
                        dist_[inc.node] = dist_[v] + 1;
                        frontier.push(inc.node);
                    }
                    if (dist_[inc.node] == dist_[v] + 1)
                        sigma_[inc.node] += sigma_[v];
                }
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it) {
                const std::size_t w = *it;
                for (const Incidence &inc : adjacency_[w]) {
                    if (removed_[inc.edge] || dist_[inc.node] != dist_[w] - 1)
                        continue;
                    const double c = sigma_[inc.node] / sigma_[w] * (1.0 + delta_[w]);
                    betweenness_[inc.edge] += c;
                    delta_[inc.node] += c;
                }
            }
        }
        // Each undirected path was counted from both endpoints.
        for (std::size_t v : nodes)
            for (const Incidence &inc : adjacency_[v])
                if (v < inc.node)
                    betweenness_[inc.edge] *= 0.5;
    }

    const Graph &graph_;
    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> adjacency_;
    std::vector<bool> removed_;
    std::vector<double> betweenness_;
    std::vector<long> dist_;
    std::vector<double> sigma_, delta_;
    std::vector<std::size_t> component_;
};

} // namespace

std::vector<std::size_t> edge_betweenness(const Graph &graph) {
    if (graph.num_edges() == 0) {
        std::vector<std::size_t> labels(graph.num_nodes());
        for (std::size_t v = 0; v < labels.size(); ++v)
            labels[v] = v;
        return labels;
    }
    return Divider(graph).run();
}

} // namespace itemnet::community

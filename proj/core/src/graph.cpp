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

#include "itemnet/graph.hpp"

#include <algorithm>
#include <limits>

#include "itemnet/error.hpp"

namespace itemnet {

Graph::Graph(std::vector<std::string> labels) : labels_(std::move(labels)) {
    index_.reserve(labels_.size());
    for (node_index i = 0; i < labels_.size(); ++i) {
        if (!index_.emplace(labels_[i], i).second)
            throw Error(Errc::DuplicateId, "duplicate node label '" + labels_[i] + "'");
    }
    adjacency_.resize(labels_.size());
    strength_.assign(labels_.size(), 0.0);
}

Graph::Graph(std::vector<std::string> labels, std::span<const Edge> edges) : Graph(std::move(labels)) {
    const std::size_t n = labels_.size();
    for (const Edge &e : edges) {
        if (e.u >= n || e.v >= n)
            throw Error(Errc::DimensionMismatch, "edge endpoint out of range");
        if (e.u == e.v)
            throw Error(Errc::DimensionMismatch, "self-loop on '" + labels_[e.u] + "'");
        if (!(e.weight > 0.0))
            throw Error(Errc::DimensionMismatch, "non-positive edge weight");
        adjacency_[e.u].push_back({e.v, e.weight});
        adjacency_[e.v].push_back({e.u, e.weight});
    }
    for (node_index v = 0; v < n; ++v) {
        auto &list = adjacency_[v];
        std::sort(list.begin(), list.end(), [](const Neighbor &a, const Neighbor &b) { return a.node < b.node; });
        for (std::size_t k = 1; k < list.size(); ++k) {
            if (list[k].node == list[k - 1].node)
                throw Error(Errc::DimensionMismatch,
                            "duplicate edge " + labels_[v] + " -- " + labels_[list[k].node]);
        }
        for (const Neighbor &nb : list) {
            strength_[v] += nb.weight;
            if (nb.weight != 1.0)
                weighted_ = true;
        }
    }
    num_edges_ = edges.size();
    // Sum in canonical order so the total does not depend on input edge order.
    for (node_index v = 0; v < n; ++v)
        for (const Neighbor &nb : adjacency_[v])
            if (v < nb.node)
                total_weight_ += nb.weight;
}

std::optional<node_index> Graph::index_of(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

bool Graph::has_edge(node_index u, node_index v) const {
    const auto &list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor &nb, node_index target) { return nb.node < target; });
    return it != list.end() && it->node == v;
}

double Graph::weight(node_index u, node_index v) const {
    const auto &list = adjacency_[u];
    auto it = std::lower_bound(list.begin(), list.end(), v,
                               [](const Neighbor &nb, node_index target) { return nb.node < target; });
    return (it != list.end() && it->node == v) ? it->weight : 0.0;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (node_index u = 0; u < adjacency_.size(); ++u)
        for (const Neighbor &nb : adjacency_[u])
            if (u < nb.node)
                out.push_back({u, nb.node, nb.weight});
    return out;
}

Graph Graph::unweighted() const {
    auto list = edges();
    for (Edge &e : list)
        e.weight = 1.0;
    return Graph(labels_, list);
}

Graph Graph::induced_subgraph(std::span<const node_index> nodes) const {
    constexpr auto absent = std::numeric_limits<node_index>::max();
    std::vector<node_index> remap(labels_.size(), absent);
    std::vector<std::string> sub_labels;
    sub_labels.reserve(nodes.size());
    for (node_index k = 0; k < nodes.size(); ++k) {
        remap[nodes[k]] = k;
        sub_labels.push_back(labels_[nodes[k]]);
    }
    std::vector<Edge> sub_edges;
    for (node_index k = 0; k < nodes.size(); ++k) {
        for (const Neighbor &nb : adjacency_[nodes[k]]) {
            node_index other = remap[nb.node];
            if (other != absent && k < other)
                sub_edges.push_back({k, other, nb.weight});
        }
    }
    return Graph(std::move(sub_labels), sub_edges);
}

bool Graph::operator==(const Graph &other) const {
    return labels_ == other.labels_ && adjacency_ == other.adjacency_;
}

std::vector<std::size_t> connected_components(const Graph &graph, std::size_t *count) {
    constexpr auto unset = std::numeric_limits<std::size_t>::max();
    const std::size_t n = graph.num_nodes();
    std::vector<std::size_t> component(n, unset);
    std::size_t next = 0;
    std::vector<node_index> stack;
    for (node_index s = 0; s < n; ++s) {
        if (component[s] != unset)
            continue;
        component[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            node_index v = stack.back();
            stack.pop_back();
            for (const Neighbor &nb : graph.neighbors(v)) {
                if (component[nb.node] == unset) {
                    component[nb.node] = next;
                    stack.push_back(nb.node);
                }
            }
        }
        ++next;
    }
    if (count != nullptr)
        *count = next;
    return component;
}

} // namespace itemnet

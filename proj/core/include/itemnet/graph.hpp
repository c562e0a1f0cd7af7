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

#ifndef ITEMNET_GRAPH_HPP_
#define ITEMNET_GRAPH_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace itemnet {

using node_index = std::size_t;

struct Neighbor {
    node_index node = 0;
    double weight = 1.0;

    bool operator==(const Neighbor &) const = default;
};

/// Undirected edge with u < v.
struct Edge {
    node_index u = 0;
    node_index v = 0;
    double weight = 1.0;

    bool operator==(const Edge &) const = default;
};

/**
 * Simple undirected graph over labelled nodes: no self-loops, no parallel edges,
 * strictly positive edge weights (1 for binary graphs). Adjacency lists are sorted
 * by neighbour index, so iteration order is a function of the value alone.
 *
 * Immutable after construction.
 */
class Graph {
public:
    Graph() = default;

    /// Edgeless graph. Labels must be unique.
    explicit Graph(std::vector<std::string> labels);

    /// Throws Error(DimensionMismatch) on self-loops, duplicate edges, out-of-range
    /// endpoints or non-positive weights.
    Graph(std::vector<std::string> labels, std::span<const Edge> edges);

    std::size_t num_nodes() const noexcept { return labels_.size(); }
    std::size_t num_edges() const noexcept { return num_edges_; }

    const std::vector<std::string> &labels() const noexcept { return labels_; }
    const std::string &label(node_index v) const { return labels_[v]; }
    std::optional<node_index> index_of(std::string_view label) const;

    std::span<const Neighbor> neighbors(node_index v) const { return adjacency_[v]; }
    std::size_t degree(node_index v) const { return adjacency_[v].size(); }

    /// Sum of incident edge weights.
    double strength(node_index v) const { return strength_[v]; }

    /// Sum of all edge weights (each edge once).
    double total_weight() const noexcept { return total_weight_; }

    bool has_edge(node_index u, node_index v) const;
    double weight(node_index u, node_index v) const;

    /// True when some edge weight differs from 1.
    bool is_weighted() const noexcept { return weighted_; }

    /// Edges with u < v, sorted by (u, v).
    std::vector<Edge> edges() const;

    /// Same topology, all weights 1.
    Graph unweighted() const;

    /// Induced subgraph; node order follows `nodes`.
    Graph induced_subgraph(std::span<const node_index> nodes) const;

    bool operator==(const Graph &other) const;

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, node_index> index_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> strength_;
    std::size_t num_edges_ = 0;
    double total_weight_ = 0.0;
    bool weighted_ = false;
};

/// Connected component id per node, numbered in order of smallest member.
std::vector<std::size_t> connected_components(const Graph &graph, std::size_t *count = nullptr);

} // namespace itemnet

#endif // ITEMNET_GRAPH_HPP_

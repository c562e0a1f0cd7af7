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

#include <algorithm>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "algorithms.hpp"
#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"

namespace itemnet {

Partition Partition::from_labels(std::span<const std::size_t> labels) {
    Partition p;
    p.assignment_.resize(labels.size());
    std::unordered_map<std::size_t, std::size_t> remap;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        auto [it, inserted] = remap.emplace(labels[i], remap.size());
        p.assignment_[i] = it->second;
    }
    p.clusters_ = remap.size();
    return p;
}

Partition Partition::singletons(std::size_t n) {
    std::vector<std::size_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0);
    return from_labels(labels);
}

Partition Partition::all_in_one(std::size_t n) {
    std::vector<std::size_t> labels(n, 0);
    return from_labels(labels);
}

std::vector<std::vector<node_index>> Partition::members() const {
    std::vector<std::vector<node_index>> out(clusters_);
    for (node_index v = 0; v < assignment_.size(); ++v)
        out[assignment_[v]].push_back(v);
    return out;
}

double modularity(const Graph &graph, const Partition &partition, ModularityVariant variant) {
    if (partition.size() != graph.num_nodes())
        throw Error(Errc::UncoveredNode, "partition covers " + std::to_string(partition.size()) + " of " +
                                             std::to_string(graph.num_nodes()) + " nodes");
    const double m = graph.total_weight();
    if (!(m > 0.0))
        throw Error(Errc::EmptyGraph, "modularity is undefined without edges");
    std::vector<double> internal(partition.num_clusters(), 0.0);
    std::vector<double> total(partition.num_clusters(), 0.0);
    double self_terms = 0.0;
    for (node_index v = 0; v < graph.num_nodes(); ++v) {
        const std::size_t c = partition[v];
        total[c] += graph.strength(v);
        self_terms += graph.strength(v) * graph.strength(v);
        for (const Neighbor &nb : graph.neighbors(v))
            if (v < nb.node && partition[nb.node] == c)
                internal[c] += nb.weight;
    }
    double q = 0.0;
    for (std::size_t c = 0; c < internal.size(); ++c)
        q += internal[c] / m - (total[c] / (2.0 * m)) * (total[c] / (2.0 * m));
    if (variant == ModularityVariant::OffDiagonal)
        q += self_terms / (4.0 * m * m);
    return q;
}

std::string_view to_string(Algorithm algorithm) {
    switch (algorithm) {
    case Algorithm::EdgeBetweenness: return "edge-betweenness";
    case Algorithm::FastGreedy: return "fast-greedy";
    case Algorithm::LabelPropagation: return "label-propagation";
    case Algorithm::LeadingEigenvector: return "leading-eigenvector";
    case Algorithm::Louvain: return "louvain";
    case Algorithm::Spinglass: return "spinglass";
    case Algorithm::Walktrap: return "walktrap";
    }
    return "unknown";
}

const std::vector<Algorithm> &all_algorithms() {
    static const std::vector<Algorithm> list = {
        Algorithm::EdgeBetweenness, Algorithm::FastGreedy, Algorithm::LabelPropagation, Algorithm::LeadingEigenvector,
        Algorithm::Louvain,         Algorithm::Spinglass,  Algorithm::Walktrap,
    };
    return list;
}

Algorithm parse_algorithm(std::string_view name) {
    for (Algorithm a : all_algorithms())
        if (to_string(a) == name)
            return a;
    if (name == "infomap" || name == "leiden")
        throw Error(Errc::UnsupportedAlgorithm, std::string(name) + " is not implemented");
    throw Error(Errc::UnsupportedAlgorithm, "unknown algorithm '" + std::string(name) + "'");
}

Partition detect(const Graph &graph, Algorithm algorithm, const DetectOptions &options) {
    if (graph.num_nodes() == 0)
        return {};
    std::vector<std::size_t> labels;
    switch (algorithm) {
    case Algorithm::EdgeBetweenness: labels = community::edge_betweenness(graph); break;
    case Algorithm::FastGreedy: labels = community::fast_greedy(graph); break;
    case Algorithm::LabelPropagation: labels = community::label_propagation(graph, options); break;
    case Algorithm::LeadingEigenvector: labels = community::leading_eigenvector(graph); break;
    case Algorithm::Louvain: labels = community::louvain(graph, options); break;
    case Algorithm::Spinglass: labels = community::spinglass(graph, options); break;
    case Algorithm::Walktrap: labels = community::walktrap(graph, options); break;
    }
    // Some methods leave edgeless nodes inside a community; split them off.
    const std::size_t fresh = *std::max_element(labels.begin(), labels.end()) + 1;
    for (node_index v = 0; v < graph.num_nodes(); ++v)
        if (graph.degree(v) == 0)
            labels[v] = fresh + v;
    return Partition::from_labels(labels);
}

BestPartition best_partition(const Graph &graph, std::span<const Algorithm> algorithms, const DetectOptions &options) {
    if (algorithms.empty())
        throw Error(Errc::UnsupportedAlgorithm, "no algorithm requested");
    std::vector<Algorithm> order(algorithms.begin(), algorithms.end());
    std::sort(order.begin(), order.end(), [](Algorithm a, Algorithm b) { return to_string(a) < to_string(b); });
    order.erase(std::unique(order.begin(), order.end()), order.end());

    BestPartition best;
    std::optional<double> best_q;
    for (Algorithm a : order) {
        auto start = std::chrono::steady_clock::now();
        Partition p = detect(graph, a, options);
        auto runtime = std::chrono::steady_clock::now() - start;
        const double q = modularity(graph, p);
        best.report.rows.push_back({std::string(to_string(a)), q, p.num_clusters(), runtime});
        // Rows arrive in name order, so strict > keeps the smaller name on ties.
        if (!best_q || q > *best_q) {
            best_q = q;
            best.report.winner = std::string(to_string(a));
            best.partition = std::move(p);
        }
    }
    return best;
}

void write_modularity_report(std::ostream &out, const ModularityReport &report, bool include_runtime) {
    std::vector<std::string> row{"algorithm", "modularity", "clusters"};
    if (include_runtime)
        row.push_back("runtime_seconds");
    write_delimited_row(out, row);
    for (const auto &r : report.rows) {
        row = {r.algorithm, format_fixed(r.modularity, 6), std::to_string(r.clusters)};
        if (include_runtime)
            row.push_back(format_fixed(r.runtime.count(), 6));
        write_delimited_row(out, row);
    }
}

void write_partition(std::ostream &out, const Graph &graph, const Partition &partition) {
    std::vector<std::string> row{"word", "cluster"};
    write_delimited_row(out, row);
    for (node_index v = 0; v < graph.num_nodes(); ++v) {
        row = {graph.label(v), std::to_string(partition[v] + 1)};
        write_delimited_row(out, row);
    }
}

namespace community {

std::vector<std::size_t> replay_merges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &merges,
                                       std::size_t steps) {
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t k = 0; k < steps && k < merges.size(); ++k) {
        std::size_t a = find(merges[k].first);
        std::size_t b = find(merges[k].second);
        if (a != b)
            parent[b] = a;
    }
    std::vector<std::size_t> labels(n);
    for (std::size_t v = 0; v < n; ++v)
        labels[v] = find(v);
    return labels;
}

} // namespace community

} // namespace itemnet

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

#ifndef ITEMNET_COMMUNITY_HPP_
#define ITEMNET_COMMUNITY_HPP_

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itemnet/graph.hpp"

namespace itemnet {

/// Assignment of every node to a cluster in 0..K-1, numbered by first appearance.
class Partition {
public:
    Partition() = default;

    /// Relabels arbitrary cluster ids to 0..K-1 in order of first appearance.
    static Partition from_labels(std::span<const std::size_t> labels);

    /// Every node in its own cluster / all nodes in one cluster.
    static Partition singletons(std::size_t n);
    static Partition all_in_one(std::size_t n);

    std::size_t size() const noexcept { return assignment_.size(); }
    std::size_t num_clusters() const noexcept { return clusters_; }
    std::size_t operator[](std::size_t node) const { return assignment_[node]; }
    const std::vector<std::size_t> &assignment() const noexcept { return assignment_; }

    /// Members of each cluster, ascending.
    std::vector<std::vector<node_index>> members() const;

    bool operator==(const Partition &) const = default;

private:
    std::vector<std::size_t> assignment_;
    std::size_t clusters_ = 0;
};

enum class ModularityVariant {
    Standard,    ///< sum over all ordered pairs, i = j included (y_ii = 0)
    OffDiagonal, ///< the same sum restricted to i != j
};

/**
 * Newman modularity. Weighted graphs use edge weights for y and node strength
 * for d; m is the total edge weight.
 *
 *   Standard:    Q = sum_c [ in_c / m - (D_c / 2m)^2 ]
 *   OffDiagonal: Q + sum_i d_i^2 / (4 m^2)
 *
 * Throws Error(UncoveredNode) if the partition size differs from the node
 * count, Error(EmptyGraph) if the graph has no edges.
 */
double modularity(const Graph &graph, const Partition &partition,
                  ModularityVariant variant = ModularityVariant::Standard);

enum class Algorithm {
    EdgeBetweenness,
    FastGreedy,
    LabelPropagation,
    LeadingEigenvector,
    Louvain,
    Spinglass,
    Walktrap,
};

std::string_view to_string(Algorithm algorithm);

/// Throws Error(UnsupportedAlgorithm) for unknown names (including infomap, leiden).
Algorithm parse_algorithm(std::string_view name);

const std::vector<Algorithm> &all_algorithms();

/// Simulated annealing on the Reichardt-Bornholdt Potts model.
struct SpinglassOptions {
    double gamma = 1.0;
    std::size_t spins = 25;
    double start_temperature = 1.0;
    double cooling_factor = 0.99;
    double stop_temperature = 0.01;
    std::size_t sweeps_per_temperature = 10;
    /// Anneal each connected component separately; when false a disconnected
    /// input raises Error(DisconnectedInput).
    bool per_component = true;
};

struct DetectOptions {
    std::uint64_t seed = 0;
    std::size_t walktrap_steps = 4;
    std::size_t label_propagation_max_passes = 1000;
    std::size_t louvain_max_passes = 1000;
    SpinglassOptions spinglass;
};

/**
 * Runs one community detection algorithm. Deterministic in (graph, algorithm,
 * options). Isolated nodes always end up in singleton clusters.
 */
Partition detect(const Graph &graph, Algorithm algorithm, const DetectOptions &options = {});

struct ModularityRow {
    std::string algorithm;
    double modularity = 0.0;
    std::size_t clusters = 0;
    std::chrono::duration<double> runtime{};
};

struct ModularityReport {
    std::vector<ModularityRow> rows; ///< sorted by algorithm name
    std::string winner;              ///< max modularity, ties to the smaller name
};

struct BestPartition {
    ModularityReport report;
    Partition partition;
};

/// Runs every algorithm, scores each with standard modularity, keeps the winner.
BestPartition best_partition(const Graph &graph, std::span<const Algorithm> algorithms,
                             const DetectOptions &options = {});

/// Columns algorithm, modularity, clusters[, runtime_seconds].
void write_modularity_report(std::ostream &out, const ModularityReport &report, bool include_runtime);

/// Columns word (node label), cluster (1-based).
void write_partition(std::ostream &out, const Graph &graph, const Partition &partition);

} // namespace itemnet

#endif // ITEMNET_COMMUNITY_HPP_

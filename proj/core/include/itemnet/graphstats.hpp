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


#ifndef ITEMNET_GRAPHSTATS_HPP_
#define ITEMNET_GRAPHSTATS_HPP_

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "itemnet/community.hpp"
#include "itemnet/graph.hpp"

namespace itemnet {

/// Limits for the exact maximum-clique search. Whichever is hit first stops
/// the search and the best clique found so far is reported as a lower bound.
/// The node limit is deterministic; the time budget is not.
struct CliqueBudget {
    std::chrono::duration<double> time{30.0};
    std::uint64_t max_search_nodes = 50'000'000;
};

struct CliqueResult {
    std::vector<node_index> members; ///< ascending
    bool exact = true;

    std::size_t size() const noexcept { return members.size(); }
};

/// Branch and bound with greedy-colouring bounds. Weights are ignored.
CliqueResult maximum_clique(const Graph &graph, const CliqueBudget &budget = {});

/// All statistics treat the graph as unweighted.
struct TopologySummary {
    std::size_t nodes = 0;
    std::size_t edges = 0;
    std::optional<double> mean_geodesic; ///< over reachable unordered pairs; absent if none
    std::uint64_t unreachable_pairs = 0;
    double mean_degree = 0.0;
    double sd_degree = 0.0; ///< denominator n - 1; 0 for a single node
    std::size_t clique_number = 0;
    bool clique_exact = true;
    double density = 0.0;
    double transitivity = 0.0;           ///< 0 when there are no connected triples
    std::optional<double> assortativity; ///< absent when endpoint degrees do not vary
};

/// Throws Error(EmptyGraph) for a graph without nodes.
TopologySummary summarize(const Graph &graph, const CliqueBudget &budget = {});

/// Rows in the order Mean geodesic distance, Mean degree, SD degree, Clique
/// number, Density, Transitivity, Associativity; columns statistic, value.
void write_topology_summary(std::ostream &out, const TopologySummary &summary);

struct CoreDecomposition {
    std::vector<std::size_t> core_number;

    std::size_t degeneracy() const;
};

/// Minimum-degree peeling (bucket queue, O(n + m)).
CoreDecomposition kcore(const Graph &graph);

struct BelowMedianCore {};
struct AtLeastCore {
    std::size_t k = 0;
};
using CoreRule = std::variant<BelowMedianCore, AtLeastCore>;

/// Node selection for a rule: core number strictly below the median core
/// number, or at least k. Throws Error(EmptySelection) when nothing qualifies.
std::vector<node_index> select_core_nodes(const CoreDecomposition &cores, const CoreRule &rule);

Graph kcore_subgraph(const Graph &graph, const CoreDecomposition &cores, const CoreRule &rule);

struct CentralityOptions {
    double tolerance = 1e-10;
    std::uint64_t max_iterations = 1'000'000;
};

/**
 * Power iteration on (A + I) with edge weights as A, separately in each
 * connected component; the shift keeps bipartite components from oscillating
 * without changing the eigenvector. Each component is scaled so its largest
 * score is 1. Isolated nodes score 0. Throws Error(NoConvergence).
 */
std::vector<double> eigenvector_centrality(const Graph &graph, const CentralityOptions &options = {});

struct RankedWord {
    std::string word;
    double centrality = 0.0;
};

/// Per cluster, words of the cluster's induced subgraph by descending
/// centrality with alphabetical ties. Throws Error(UncoveredNode).
std::vector<std::vector<RankedWord>> rank_cluster_words(const Graph &bigram_graph, const Partition &partition,
                                                        const CentralityOptions &options = {});

/// Columns cluster (1-based), rank, word, centrality.
void write_ranked_words(std::ostream &out, const std::vector<std::vector<RankedWord>> &ranking);

} // namespace itemnet

#endif // ITEMNET_GRAPHSTATS_HPP_

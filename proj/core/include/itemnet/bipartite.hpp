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

#ifndef ITEMNET_BIPARTITE_HPP_
#define ITEMNET_BIPARTITE_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "itemnet/graph.hpp"
#include "itemnet/ingest.hpp"

namespace itemnet {

/**
 * Binary user x item incidence matrix Y, stored sparsely in both orientations.
 * Rows are users, columns items; y(i, j) = 1 iff user i watched item j.
 */
class BipartiteGraph {
public:
    BipartiteGraph(std::vector<std::string> user_ids, std::vector<std::string> item_ids,
                   std::vector<std::vector<std::uint32_t>> items_by_user);

    std::size_t num_users() const noexcept { return user_ids_.size(); }
    std::size_t num_items() const noexcept { return item_ids_.size(); }
    std::size_t num_links() const noexcept { return num_links_; }

    const std::vector<std::string> &user_ids() const noexcept { return user_ids_; }
    const std::vector<std::string> &item_ids() const noexcept { return item_ids_; }

    /// Sorted item columns of user row i.
    std::span<const std::uint32_t> items_of(std::size_t user) const { return items_by_user_[user]; }
    /// Sorted user rows of item column j (the item's audience).
    std::span<const std::uint32_t> users_of(std::size_t item) const { return users_by_item_[item]; }

    /// Column sums of Y.
    std::size_t item_degree(std::size_t item) const { return users_by_item_[item].size(); }
    std::size_t user_degree(std::size_t user) const { return items_by_user_[user].size(); }

    bool at(std::size_t user, std::size_t item) const;

    /// Dense copy of Y (row-major, users x items). Intended for small inputs.
    std::vector<std::vector<int>> dense() const;

private:
    std::vector<std::string> user_ids_;
    std::vector<std::string> item_ids_;
    std::vector<std::vector<std::uint32_t>> items_by_user_;
    std::vector<std::vector<std::uint32_t>> users_by_item_;
    std::size_t num_links_ = 0;
};

struct IncidenceBuild {
    BipartiteGraph graph;
    std::size_t dropped_interactions = 0; ///< pairs whose item is outside the universe
};

/**
 * Builds Y from the interactions whose item belongs to `item_universe`. Users
 * are ordered by first appearance in the (sorted) interaction set; items keep
 * the universe order, including items nobody watched. Throws Error(EmptyGraph)
 * when no interaction survives.
 */
IncidenceBuild build_incidence(const InteractionSet &interactions, std::span<const std::string> item_universe);

/**
 * One-mode projection with structural-zero diagonal: symmetric non-negative
 * integer weights, stored as sorted sparse rows of positive entries.
 */
class WeightedGraph {
public:
    struct Entry {
        std::uint32_t node;
        std::uint32_t weight;
        bool operator==(const Entry &) const = default;
    };

    WeightedGraph(std::vector<std::string> node_ids, std::vector<std::vector<Entry>> rows);

    std::size_t size() const noexcept { return node_ids_.size(); }
    const std::vector<std::string> &node_ids() const noexcept { return node_ids_; }
    std::span<const Entry> row(std::size_t i) const { return rows_[i]; }

    std::uint32_t weight(std::size_t i, std::size_t j) const;

    /// Number of unordered pairs with positive weight.
    std::size_t support_size() const;

    std::vector<std::vector<std::uint32_t>> dense() const;

    /// The weighted co-occurrence graph (weights as edge weights).
    Graph to_graph() const;

    bool operator==(const WeightedGraph &other) const = default;

private:
    std::vector<std::string> node_ids_;
    std::vector<std::vector<Entry>> rows_;
};

/// Y^T Y with zero diagonal: shared-audience counts between items.
WeightedGraph project_items(const BipartiteGraph &bipartite);

/// Y Y^T with zero diagonal: shared-item counts between users.
WeightedGraph project_users(const BipartiteGraph &bipartite);

/**
 * Keeps pair (i, j) iff co(i,j) / (deg(i) + deg(j) - co(i,j)) >= tau, i.e. the
 * Jaccard index of the two audiences. Pairs with co = 0 never connect. Throws
 * Error(OutOfRange) unless tau is in (0, 1], Error(DimensionMismatch) if W is not
 * the item projection of B.
 */
Graph binarize(const WeightedGraph &item_projection, const BipartiteGraph &bipartite, double tau = 0.75);

/// Same rule from persisted projection weights and item degrees.
Graph binarize(const WeightedGraph &item_projection, std::span<const std::size_t> item_degrees, double tau = 0.75);

/// Columns: item_id_a, item_id_b, weight (positive entries, a < b by index).
void write_projection(std::ostream &out, const WeightedGraph &projection, const std::string &a = "item_id_a",
                      const std::string &b = "item_id_b");

} // namespace itemnet

#endif // ITEMNET_BIPARTITE_HPP_

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

#include "itemnet/bipartite.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/parallel.hpp"

namespace itemnet {

BipartiteGraph::BipartiteGraph(std::vector<std::string> user_ids, std::vector<std::string> item_ids,
                               std::vector<std::vector<std::uint32_t>> items_by_user)
    : user_ids_(std::move(user_ids)), item_ids_(std::move(item_ids)), items_by_user_(std::move(items_by_user)) {
    if (items_by_user_.size() != user_ids_.size())
        throw Error(Errc::DimensionMismatch, "row count differs from user label count");
    users_by_item_.resize(item_ids_.size());
    for (std::size_t u = 0; u < items_by_user_.size(); ++u) {
        auto &row = items_by_user_[u];
        std::sort(row.begin(), row.end());
        row.erase(std::unique(row.begin(), row.end()), row.end());
        for (std::uint32_t j : row) {
            if (j >= item_ids_.size())
                throw Error(Errc::DimensionMismatch, "item column out of range");
            users_by_item_[j].push_back(static_cast<std::uint32_t>(u));
        }
        num_links_ += row.size();
    }
}

bool BipartiteGraph::at(std::size_t user, std::size_t item) const {
    const auto &row = items_by_user_[user];
    return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(item));
}

std::vector<std::vector<int>> BipartiteGraph::dense() const {
    std::vector<std::vector<int>> y(num_users(), std::vector<int>(num_items(), 0));
    for (std::size_t u = 0; u < num_users(); ++u)
        for (std::uint32_t j : items_by_user_[u])
            y[u][j] = 1;
    return y;
}

IncidenceBuild build_incidence(const InteractionSet &interactions, std::span<const std::string> item_universe) {
    std::unordered_map<std::string, std::uint32_t> item_index;
    item_index.reserve(item_universe.size());
    for (std::size_t j = 0; j < item_universe.size(); ++j)
        if (!item_index.emplace(item_universe[j], static_cast<std::uint32_t>(j)).second)
            throw Error(Errc::DuplicateId, item_universe[j]);

    std::vector<std::string> users;
    std::vector<std::vector<std::uint32_t>> rows;
    std::size_t dropped = 0;
    for (const Interaction &rec : interactions.records()) {
        auto it = item_index.find(rec.item_id);
        if (it == item_index.end()) {
            ++dropped;
            continue;
        }
        // Records are sorted by user, so a new user id always starts a new row.
        if (users.empty() || users.back() != rec.user_id) {
            users.push_back(rec.user_id);
            rows.emplace_back();
        }
        rows.back().push_back(it->second);
    }
    if (users.empty())
        throw Error(Errc::EmptyGraph, "no interaction references an item in the universe");
    std::vector<std::string> items(item_universe.begin(), item_universe.end());
    return {BipartiteGraph(std::move(users), std::move(items), std::move(rows)), dropped};
}

WeightedGraph::WeightedGraph(std::vector<std::string> node_ids, std::vector<std::vector<Entry>> rows)
    : node_ids_(std::move(node_ids)), rows_(std::move(rows)) {
    if (rows_.size() != node_ids_.size())
        throw Error(Errc::DimensionMismatch, "row count differs from node label count");
}

std::uint32_t WeightedGraph::weight(std::size_t i, std::size_t j) const {
    const auto &r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j,
                               [](const Entry &e, std::size_t target) { return e.node < target; });
    return (it != r.end() && it->node == j) ? it->weight : 0;
}

std::size_t WeightedGraph::support_size() const {
    std::size_t total = 0;
    for (const auto &r : rows_)
        total += r.size();
    return total / 2;
}

std::vector<std::vector<std::uint32_t>> WeightedGraph::dense() const {
    std::vector<std::vector<std::uint32_t>> w(size(), std::vector<std::uint32_t>(size(), 0));
    for (std::size_t i = 0; i < size(); ++i)
        for (const Entry &e : rows_[i])
            w[i][e.node] = e.weight;
    return w;
}

Graph WeightedGraph::to_graph() const {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < size(); ++i)
        for (const Entry &e : rows_[i])
            if (i < e.node)
                edges.push_back({i, e.node, static_cast<double>(e.weight)});
    return Graph(node_ids_, edges);
}

namespace {

// Row i of A A^T (A given as sparse rows `outer`, with transpose `inner`),
// excluding the diagonal. Each row is computed independently into its own slot.
WeightedGraph co_occurrence(const std::vector<std::string> &labels,
                            const std::vector<std::span<const std::uint32_t>> &outer,
                            const std::vector<std::span<const std::uint32_t>> &inner) {
    const std::size_t n = labels.size();
    std::vector<std::vector<WeightedGraph::Entry>> rows(n);
    parallel_for(n, [&](std::size_t i) {
        std::unordered_map<std::uint32_t, std::uint32_t> counts;
        for (std::uint32_t shared : outer[i])
            for (std::uint32_t j : inner[shared])
                if (j != i)
                    ++counts[j];
        auto &row = rows[i];
        row.reserve(counts.size());
        for (const auto &[j, c] : counts)
            row.push_back({j, c});
        std::sort(row.begin(), row.end(), [](const auto &a, const auto &b) { return a.node < b.node; });
    });
    return WeightedGraph(labels, std::move(rows));
}

} // namespace

WeightedGraph project_items(const BipartiteGraph &bipartite) {
    std::vector<std::span<const std::uint32_t>> audiences, baskets;
    for (std::size_t j = 0; j < bipartite.num_items(); ++j)
        audiences.push_back(bipartite.users_of(j));
    for (std::size_t u = 0; u < bipartite.num_users(); ++u)
        baskets.push_back(bipartite.items_of(u));
    return co_occurrence(bipartite.item_ids(), audiences, baskets);
}

WeightedGraph project_users(const BipartiteGraph &bipartite) {
    std::vector<std::span<const std::uint32_t>> audiences, baskets;
    for (std::size_t j = 0; j < bipartite.num_items(); ++j)
        audiences.push_back(bipartite.users_of(j));
    for (std::size_t u = 0; u < bipartite.num_users(); ++u)
        baskets.push_back(bipartite.items_of(u));
    return co_occurrence(bipartite.user_ids(), baskets, audiences);
}

Graph binarize(const WeightedGraph &item_projection, std::span<const std::size_t> item_degrees, double tau) {
    if (!(tau > 0.0 && tau <= 1.0))
        throw Error(Errc::OutOfRange, "tau out of (0,1]");
    if (item_degrees.size() != item_projection.size())
        throw Error(Errc::DimensionMismatch, "projection and incidence disagree on the item count");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < item_projection.size(); ++i) {
        for (const auto &entry : item_projection.row(i)) {
            const std::size_t j = entry.node;
            const std::size_t co = entry.weight;
            if (co > std::min(item_degrees[i], item_degrees[j]))
                throw Error(Errc::DimensionMismatch, "co-view count exceeds an item degree");
            if (j <= i)
                continue;
            const std::size_t either = item_degrees[i] + item_degrees[j] - co;
            if (static_cast<double>(co) / static_cast<double>(either) >= tau)
                edges.push_back({i, j, 1.0});
        }
    }
    return Graph(item_projection.node_ids(), edges);
}

Graph binarize(const WeightedGraph &item_projection, const BipartiteGraph &bipartite, double tau) {
    if (item_projection.node_ids() != bipartite.item_ids())
        throw Error(Errc::DimensionMismatch, "projection is not over the incidence's items");
    std::vector<std::size_t> degrees(bipartite.num_items());
    for (std::size_t j = 0; j < degrees.size(); ++j)
        degrees[j] = bipartite.item_degree(j);
    return binarize(item_projection, degrees, tau);
}

void write_projection(std::ostream &out, const WeightedGraph &projection, const std::string &a,
                      const std::string &b) {
    std::vector<std::string> row{a, b, "weight"};
    write_delimited_row(out, row);
    for (std::size_t i = 0; i < projection.size(); ++i) {
        for (const auto &entry : projection.row(i)) {
            if (entry.node <= i)
                continue;
            row = {projection.node_ids()[i], projection.node_ids()[entry.node], std::to_string(entry.weight)};
            write_delimited_row(out, row);
        }
    }
}

} // namespace itemnet

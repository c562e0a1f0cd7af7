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

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "itemnet/bipartite.hpp"
#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "oracles.hpp"

namespace itemnet {
namespace {

const std::vector<std::string> kToyItems{"a1", "a2", "a3", "a4"};

BipartiteGraph toy() {
    auto s = load_interactions(testing::data_path("fixtures/toy_interactions.csv"));
    return build_incidence(s, kToyItems).graph;
}

TEST(Incidence, ToyMatrix) {
    BipartiteGraph b = toy();
    EXPECT_EQ(b.user_ids(), (std::vector<std::string>{"u1", "u2", "u3"}));
    EXPECT_EQ(b.dense(), (std::vector<std::vector<int>>{{1, 1, 0, 0}, {0, 1, 1, 0}, {1, 1, 1, 1}}));
    EXPECT_EQ(b.num_links(), 8u);
}

TEST(Incidence, SinglePair) {
    InteractionSet s(std::vector<Interaction>{{"u", "i"}});
    std::vector<std::string> items{"i"};
    auto r = build_incidence(s, items);
    EXPECT_EQ(r.graph.dense(), (std::vector<std::vector<int>>{{1}}));
}

TEST(Incidence, UnknownItemsDroppedAndCounted) {
    InteractionSet s({{"u1", "i"}, {"u1", "zz"}, {"u2", "zz"}});
    std::vector<std::string> items{"i"};
    auto r = build_incidence(s, items);
    EXPECT_EQ(r.dropped_interactions, 2u);
    EXPECT_EQ(r.graph.num_users(), 1u);
}

TEST(Incidence, NothingSurvivingIsEmptyGraph) {
    InteractionSet s(std::vector<Interaction>{{"u1", "zz"}});
    std::vector<std::string> items{"i"};
    try {
        build_incidence(s, items);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::EmptyGraph);
    }
}

TEST(Projection, ToyItemProjection) {
    auto w = project_items(toy()).dense();
    std::vector<std::vector<std::uint32_t>> expected{{0, 2, 1, 1}, {2, 0, 2, 1}, {1, 2, 0, 1}, {1, 1, 1, 0}};
    EXPECT_EQ(w, expected);
}

TEST(Projection, ToyUserProjection) {
    auto w = project_users(toy()).dense();
    std::vector<std::vector<std::uint32_t>> expected{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
    EXPECT_EQ(w, expected);
}

TEST(Projection, SingleUserIsZero) {
    InteractionSet s({{"u", "a"}, {"u", "b"}});
    std::vector<std::string> items{"a", "b"};
    auto w = project_users(build_incidence(s, items).graph);
    EXPECT_EQ(w.dense(), (std::vector<std::vector<std::uint32_t>>{{0}}));
}

TEST(Projection, OrthogonalColumnsGiveZeroWeights) {
    InteractionSet s({{"u1", "a"}, {"u2", "b"}, {"u3", "c"}});
    std::vector<std::string> items{"a", "b", "c"};
    EXPECT_EQ(project_items(build_incidence(s, items).graph).support_size(), 0u);
}

BipartiteGraph random_bipartite(std::size_t users, std::size_t items, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    std::vector<Interaction> rows;
    std::vector<std::string> universe;
    for (std::size_t j = 0; j < items; ++j)
        universe.push_back("i" + std::to_string(j));
    for (std::size_t i = 0; i < users; ++i)
        for (std::size_t j = 0; j < items; ++j)
            if (coin(rng) || j == i % items)
                rows.push_back({"u" + std::to_string(i), universe[j]});
    return build_incidence(InteractionSet(rows), universe).graph;
}

TEST(Projection, MatchesBruteForceOnRandomInstances) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const std::size_t n = 2 + seed % 11, p = 2 + (seed * 5) % 11;
        BipartiteGraph b = random_bipartite(n, p, 0.35, seed);
        const auto y = b.dense();
        auto items = project_items(b).dense();
        auto users = project_users(b).dense();
        EXPECT_EQ(items, testing::pairwise_overlaps(y, true)) << seed;
        EXPECT_EQ(users, testing::pairwise_overlaps(y, false)) << seed;
        for (std::size_t i = 0; i < items.size(); ++i) {
            EXPECT_EQ(items[i][i], 0u);
            for (std::size_t j = 0; j < items.size(); ++j) {
                EXPECT_EQ(items[i][j], items[j][i]);
                EXPECT_LE(items[i][j], std::min(b.item_degree(i), b.item_degree(j)));
            }
        }
    }
}

TEST(Binarize, JaccardBoundaries) {
    // Audiences {u1,u2,u3} and {u1,u2,u3,u4}: Jaccard 3/4. Audiences {u5}, {u6}: 0.
    InteractionSet s({{"u1", "a"}, {"u2", "a"}, {"u3", "a"}, {"u1", "b"}, {"u2", "b"}, {"u3", "b"},
                      {"u4", "b"}, {"u5", "c"}, {"u6", "d"}, {"u1", "e"}, {"u2", "e"}, {"u3", "e"}});
    std::vector<std::string> items{"a", "b", "c", "d", "e"};
    BipartiteGraph b = build_incidence(s, items).graph;
    WeightedGraph w = project_items(b);
    Graph g = binarize(w, b, 0.75);
    EXPECT_TRUE(g.has_edge(0, 1));
    EXPECT_TRUE(g.has_edge(0, 4)); // identical audiences
    EXPECT_FALSE(g.has_edge(2, 3));
    EXPECT_FALSE(binarize(w, b, 0.76).has_edge(0, 1));
    EXPECT_EQ(g.num_nodes(), 5u);
}

TEST(Binarize, MonotoneInTauAndSmallTauGivesSupport) {
    BipartiteGraph b = random_bipartite(30, 12, 0.3, 99);
    WeightedGraph w = project_items(b);
    std::size_t previous = SIZE_MAX;
    for (double tau = 0.05; tau <= 1.0; tau += 0.05) {
        const std::size_t edges = binarize(w, b, tau).num_edges();
        EXPECT_LE(edges, previous);
        previous = edges;
    }
    EXPECT_EQ(binarize(w, b, 1e-12).num_edges(), w.support_size());
}

TEST(Binarize, RejectsForeignProjectionAndBadTau) {
    BipartiteGraph b = toy();
    WeightedGraph users = project_users(b);
    try {
        binarize(users, b, 0.5);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::DimensionMismatch);
    }
    EXPECT_THROW(binarize(project_items(b), b, 0.0), Error);
    EXPECT_THROW(binarize(project_items(b), b, 1.5), Error);
}

TEST(Projection, WriterColumns) {
    std::ostringstream out;
    write_projection(out, project_items(toy()));
    auto rows = parse_delimited(out.str());
    EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"item_id_a", "item_id_b", "weight"}));
    EXPECT_EQ(rows.size(), 7u);
    EXPECT_EQ(rows[1].fields, (std::vector<std::string>{"a1", "a2", "2"}));
}

} // namespace
} // namespace itemnet

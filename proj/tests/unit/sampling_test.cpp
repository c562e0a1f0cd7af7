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

#include <cmath>
#include <numeric>
#include <set>
#include <sstream>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/sampling.hpp"
#include "oracles.hpp"

namespace itemnet {
namespace {

TEST(ZCritical, KnownValues) {
    EXPECT_NEAR(z_critical(0.95), 1.959964, 1e-6);
    EXPECT_NEAR(z_critical(0.85), 1.439531, 1e-6);
    EXPECT_NEAR(z_critical(1e-9), 0.0, 1e-8);
    for (double c = 0.05; c < 1.0; c += 0.05)
        EXPECT_NEAR(z_critical(c), testing::reference_normal_quantile(1.0 - (1.0 - c) / 2.0), 1e-10);
    EXPECT_THROW(z_critical(1.0), Error);
    EXPECT_THROW(z_critical(0.0), Error);
}

TEST(SampleSize, WorkedExamples) {
    EXPECT_EQ(sample_size(1000, 0.0, 0.95, 0.2), 0u);
    EXPECT_EQ(sample_size(1000, 4.0, 0.95, 0.2), 278u);
    EXPECT_EQ(sample_size(1, 3.0, 0.85, 0.2), 1u);
    EXPECT_THROW(sample_size(0, 1.0, 0.85, 0.2), Error);
    EXPECT_THROW(sample_size(10, -1.0, 0.85, 0.2), Error);
    EXPECT_THROW(sample_size(10, 1.0, 0.85, 0.0), Error);
}

TEST(SampleSize, LargePopulationLimit) {
    for (double s2 : {0.5, 1.7, 4.0}) {
        const double z = z_critical(0.85);
        const double limit = z * z * s2 / (0.2 * 0.2);
        EXPECT_LE(std::abs(static_cast<double>(sample_size(1'000'000'000, s2, 0.85, 0.2)) - limit), 1.0);
    }
}

SamplingParams params(std::size_t min_count) {
    SamplingParams p;
    p.min_genre_count = min_count;
    p.seed = 11;
    return p;
}

Catalog genre_catalog(std::size_t per_genre_a, std::size_t per_genre_b, bool overlap) {
    Catalog c;
    for (std::size_t i = 0; i < per_genre_a; ++i)
        c.push_back({"a" + std::to_string(i), "", 1.0 + static_cast<double>(i % 7), {"A"}, "x"});
    for (std::size_t i = 0; i < per_genre_b; ++i) {
        CatalogEntry e{"b" + std::to_string(i), "", 2.0 + static_cast<double>(i % 5), {"B"}, "x"};
        if (overlap && i < per_genre_a)
            c[i].genres.insert("B");
        else
            c.push_back(e);
    }
    return c;
}

TEST(FilterGenres, StrictCutoffAndExclusion) {
    Catalog c;
    for (int i = 0; i < 100; ++i)
        c.push_back({"x" + std::to_string(i), "", 5.0, {"Edge"}, std::nullopt});
    for (int i = 0; i < 101; ++i)
        c.push_back({"y" + std::to_string(i), "", 5.0, {"Above", "Hentai"}, std::nullopt});
    auto g = filter_genres(c, params(100));
    EXPECT_EQ(g.count("Edge"), 0u);
    EXPECT_EQ(g.at("Above"), 101u);
    EXPECT_EQ(g.count("Hentai"), 0u);
    EXPECT_TRUE(filter_genres({}, params(0)).empty());
}

TEST(StratifiedSample, ExhaustiveDisjointStrata) {
    Catalog c = genre_catalog(10, 20, false);
    SamplingParams p = params(0);
    p.margin_of_error = 1e-3;
    auto r = stratified_sample(c, p);
    EXPECT_EQ(r.plan.per_genre.at("A").sample_size, 10u);
    EXPECT_EQ(r.plan.per_genre.at("B").sample_size, 20u);
    EXPECT_EQ(r.items.size(), 30u);
    EXPECT_EQ(r.plan.union_size, 30u);
}

TEST(StratifiedSample, SharedItemCountedOnce) {
    Catalog c;
    c.push_back({"shared", "", 5.0, {"A", "B"}, std::nullopt});
    c.push_back({"a", "", 6.0, {"A"}, std::nullopt});
    c.push_back({"b", "", 7.0, {"B"}, std::nullopt});
    SamplingParams p = params(0);
    p.margin_of_error = 1e-3;
    auto r = stratified_sample(c, p);
    EXPECT_EQ(r.plan.total_drawn(), 4u);
    EXPECT_EQ(r.items, (std::vector<std::string>{"shared", "a", "b"}));
}

TEST(StratifiedSample, PlanInvariantsAndDeterminism) {
    Catalog c = genre_catalog(60, 90, true);
    SamplingParams p = params(10);
    p.margin_of_error = 0.5;
    auto first = stratified_sample(c, p);
    auto second = stratified_sample(c, p);
    EXPECT_EQ(first.items, second.items);
    std::size_t sum = 0;
    for (const auto &[genre, s] : first.plan.per_genre) {
        EXPECT_LE(s.sample_size, s.population) << genre;
        sum += s.sample_size;
    }
    EXPECT_LE(first.plan.union_size, sum);
    EXPECT_EQ(first.plan.union_size, first.items.size());
    p.seed = 12;
    EXPECT_NE(stratified_sample(c, p).items, first.items);
}

TEST(StratifiedSample, VarianceUsesScoredMembersOnly) {
    Catalog c;
    c.push_back({"1", "", 2.0, {"A"}, std::nullopt});
    c.push_back({"2", "", 4.0, {"A"}, std::nullopt});
    c.push_back({"3", "", std::nullopt, {"A"}, std::nullopt});
    c.push_back({"4", "", 9.0, {"A"}, std::nullopt});
    auto r = stratified_sample(c, params(0));
    const auto &s = r.plan.per_genre.at("A");
    EXPECT_EQ(s.population, 3u);
    EXPECT_NEAR(s.variance, 13.0, 1e-12); // mean 5, squares 9+1+16, / 2
}

TEST(StratifiedSample, SingleMemberStratumIsDegenerate) {
    Catalog c;
    c.push_back({"solo", "", 3.0, {"A"}, std::nullopt});
    auto r = stratified_sample(c, params(0));
    const auto &s = r.plan.per_genre.at("A");
    EXPECT_TRUE(s.degenerate);
    EXPECT_EQ(s.variance, 0.0);
    EXPECT_EQ(s.sample_size, 1u);
    EXPECT_EQ(r.items, std::vector<std::string>{"solo"});
    EXPECT_FALSE(r.warnings.empty());
}

TEST(StratifiedSample, PlanReportColumns) {
    auto r = stratified_sample(genre_catalog(10, 20, false), params(0));
    std::ostringstream out;
    write_sample_plan(out, r.plan);
    auto rows = parse_delimited(out.str());
    EXPECT_EQ(rows[0].fields, (std::vector<std::string>{"genre", "N", "S2", "n"}));
    EXPECT_EQ(rows.size(), 3u);
}

} // namespace
} // namespace itemnet

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

#include <fstream>
#include <map>
#include <set>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/features.hpp"
#include "itemnet/graph_io.hpp"
#include "itemnet_tools/config.hpp"
#include "itemnet_tools/pipeline.hpp"
#include "oracles.hpp"

namespace itemnet::tools {
namespace {

namespace fs = std::filesystem;

PipelineConfig toy_config(const fs::path &out) {
    nlohmann::json doc{{"seed", 1},
                       {"output_dir", out.string()},
                       {"inputs",
                        {{"catalog", testing::data_path("fixtures/toy_catalog.csv").string()},
                         {"interactions", testing::data_path("fixtures/toy_interactions.csv").string()}}},
                       {"projection", {{"write_user_projection", true}}}};
    auto r = validate_config_json(doc, out.parent_path());
    EXPECT_TRUE(r.errors.empty());
    return *r.config;
}

std::map<std::pair<std::string, std::string>, std::string> weights(const fs::path &file) {
    std::map<std::pair<std::string, std::string>, std::string> out;
    auto rows = read_delimited(file);
    for (std::size_t i = 1; i < rows.size(); ++i)
        out[{rows[i].fields[0], rows[i].fields[1]}] = rows[i].fields[2];
    return out;
}

TEST(Pipeline, ProjectStageOnToyFixture) {
    auto out = testing::scratch_dir("toy-project") / "out";
    fs::create_directories(out);
    {
        std::ofstream sampled(out / artifact::sampled_items);
        sampled << "a1\na2\na3\na4\n";
    }
    auto records = run_stage(Stage::Project, toy_config(out));
    ASSERT_EQ(records.size(), 1u);
    std::map<std::pair<std::string, std::string>, std::string> items{
        {{"a1", "a2"}, "2"}, {{"a1", "a3"}, "1"}, {{"a1", "a4"}, "1"},
        {{"a2", "a3"}, "2"}, {{"a2", "a4"}, "1"}, {{"a3", "a4"}, "1"}};
    EXPECT_EQ(weights(out / artifact::item_projection), items);
    std::map<std::pair<std::string, std::string>, std::string> users{
        {{"u1", "u2"}, "1"}, {{"u1", "u3"}, "2"}, {{"u2", "u3"}, "2"}};
    EXPECT_EQ(weights(out / artifact::user_projection), users);
    auto report = nlohmann::json::parse(testing::slurp(out / artifact::run_report));
    EXPECT_EQ(report["stages"].size(), 1u);
    EXPECT_EQ(report["stages"][0]["stage"], "project");
}

TEST(Pipeline, MissingPrerequisite) {
    auto out = testing::scratch_dir("missing-prereq") / "out";
    for (Stage stage : {Stage::Ergm, Stage::Project, Stage::Cluster, Stage::Stats}) {
        try {
            run_stage(stage, toy_config(out));
            ADD_FAILURE() << to_string(stage);
        } catch (const Error &e) {
            EXPECT_EQ(e.code(), Errc::MissingPrerequisite) << to_string(stage);
        }
    }
}

PipelineConfig synthetic_config(const fs::path &out) {
    auto r = validate_config(testing::data_path("synthetic/config.json"), nlohmann::json{{"output_dir", out.string()}});
    EXPECT_TRUE(r.errors.empty()) << (r.errors.empty() ? "" : r.errors[0]);
    return *r.config;
}

TEST(Pipeline, StagesChainAndRerunsAreStable) {
    auto out = testing::scratch_dir("synthetic-stages") / "out";
    PipelineConfig config = synthetic_config(out);
    for (Stage stage : stage_order())
        run_stage(stage, config);
    const std::string coefficients = testing::slurp(out / artifact::ergm_coefficients);
    const std::string partition = testing::slurp(out / artifact::partition);
    run_stage(Stage::Cluster, config);
    EXPECT_EQ(testing::slurp(out / artifact::partition), partition);
    run_stage(Stage::Ergm, config);
    EXPECT_EQ(testing::slurp(out / artifact::ergm_coefficients), coefficients);

    auto report = nlohmann::json::parse(testing::slurp(out / artifact::run_report));
    ASSERT_EQ(report["stages"].size(), stage_order().size());
    std::set<std::string> seen;
    for (const auto &s : report["stages"])
        EXPECT_TRUE(seen.insert(s["stage"].get<std::string>()).second);
    EXPECT_EQ(report["software_version"], std::string(software_version()));
    EXPECT_EQ(report["config"]["seed"], 42);
}

TEST(Pipeline, ErgmNodesAreSampledAndDescribed) {
    auto out = testing::scratch_dir("synthetic-counts") / "out";
    PipelineConfig config = synthetic_config(out);
    run_stage(Stage::All, config);
    Catalog catalog = load_catalog(config.catalog);
    std::set<std::string> described;
    for (const auto &e : catalog)
        if (e.description)
            described.insert(e.item_id);
    std::size_t expected = 0;
    for (const auto &id : read_node_list(out / artifact::sampled_items))
        expected += described.count(id);
    auto covariates = load_covariates((out / artifact::covariates).string());
    EXPECT_EQ(covariates.num_items(), expected);
    auto design = read_delimited(out / artifact::ergm_design);
    EXPECT_EQ(design.size() - 1, expected * (expected - 1) / 2);
}

} // namespace
} // namespace itemnet::tools

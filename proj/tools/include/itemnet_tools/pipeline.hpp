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


#ifndef ITEMNET_TOOLS_PIPELINE_HPP_
#define ITEMNET_TOOLS_PIPELINE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itemnet_tools/config.hpp"
#include "json.hpp"

namespace itemnet::tools {

enum class Stage { Sample, Project, Binarize, Bigrams, Cluster, Features, Stats, Ergm, All };

std::string_view to_string(Stage stage);
std::optional<Stage> parse_stage(std::string_view name);

/// Every stage except All, in execution order.
const std::vector<Stage> &stage_order();

/// File names of the stage artifacts inside the output directory.
namespace artifact {
inline constexpr const char *sample_plan = "sample_plan.csv";
inline constexpr const char *sampled_items = "sampled_items.txt";
inline constexpr const char *item_projection = "item_projection.csv";
inline constexpr const char *item_degrees = "item_degrees.csv";
inline constexpr const char *user_projection = "user_projection.csv";
inline constexpr const char *item_graph_nodes = "item_graph_nodes.txt";
inline constexpr const char *item_graph_edges = "item_graph_edges.csv";
inline constexpr const char *item_graph_graphml = "item_graph.graphml";
inline constexpr const char *bigram_counts = "bigram_counts.csv";
inline constexpr const char *dispersogram = "dispersogram.csv";
inline constexpr const char *bigram_graph_nodes = "bigram_graph_nodes.txt";
inline constexpr const char *bigram_graph_edges = "bigram_graph_edges.csv";
inline constexpr const char *modularity = "modularity.csv";
inline constexpr const char *partition = "partition.csv";
inline constexpr const char *cluster_words = "cluster_words.csv";
inline constexpr const char *lexicon = "lexicon.txt";
inline constexpr const char *covariates = "covariates.csv";
inline constexpr const char *word_frequencies = "word_frequencies.csv";
inline constexpr const char *topology = "topology.csv";
inline constexpr const char *kcore = "kcore.csv";
inline constexpr const char *kcore_graphml = "kcore_subgraph.graphml";
inline constexpr const char *kcore_dot = "kcore_subgraph.dot";
inline constexpr const char *ergm_coefficients = "ergm_coefficients.csv";
inline constexpr const char *ergm_gof = "ergm_gof.csv";
inline constexpr const char *ergm_design = "ergm_design.csv";
inline constexpr const char *run_report = "run_report.json";
} // namespace artifact

/// What one stage did, as recorded in the run report.
struct StageRecord {
    Stage stage = Stage::Sample;
    double seconds = 0.0;
    nlohmann::json counts = nlohmann::json::object();
    nlohmann::json decisions = nlohmann::json::object();
    std::vector<std::string> warnings;
};

/**
 * Runs one stage (or all of them in order), writing its artifacts to the
 * output directory and updating run_report.json there. Stage inputs that come
 * from earlier stages are read back from their artifacts; a missing one raises
 * Error(MissingPrerequisite).
 */
std::vector<StageRecord> run_stage(Stage stage, const PipelineConfig &config);

/// Version string recorded in run reports.
std::string_view software_version();

} // namespace itemnet::tools

#endif // ITEMNET_TOOLS_PIPELINE_HPP_

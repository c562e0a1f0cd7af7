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


#ifndef ITEMNET_TOOLS_CONFIG_HPP_
#define ITEMNET_TOOLS_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "itemnet/community.hpp"
#include "itemnet/graphstats.hpp"
#include "itemnet/ingest.hpp"
#include "itemnet/sampling.hpp"
#include "itemnet/textnet.hpp"
#include "json.hpp"

namespace itemnet::tools {

/// Everything a pipeline run needs. Relative paths in the config file are
/// resolved against the file's directory.
struct PipelineConfig {
    std::filesystem::path catalog;
    std::filesystem::path interactions;
    std::string stopwords = "builtin"; ///< "builtin" or a path
    CatalogColumns catalog_columns;
    InteractionColumns interaction_columns;
    std::filesystem::path output_dir;
    std::uint64_t seed = 0;

    SamplingParams sampling;

    double tau = 0.75;
    bool write_user_projection = false;
    bool drop_isolated = false;

    StopwordMode stopword_mode = StopwordMode::RemoveAfter;
    ThresholdRule threshold_rule = ManualThreshold{20};
    std::uint64_t dispersogram_max = 100;

    std::vector<Algorithm> algorithms = all_algorithms();
    bool weighted_modularity = true;
    DetectOptions detect; ///< seed is filled from `seed`

    bool presence_only = false;

    CliqueBudget clique;
    CoreRule kcore_rule = BelowMedianCore{};
    CentralityOptions centrality;

    std::vector<std::string> ergm_terms{"edges", "nodecov(*)"};
    bool standardize = false;
    std::size_t gof_simulations = 100;
    bool export_design = false;
};

struct ConfigResult {
    std::optional<PipelineConfig> config; ///< set when `errors` is empty
    std::vector<std::string> errors;
};

/**
 * Parses a JSON config, fills defaults and lists every violation found rather
 * than stopping at the first. `overrides` is merged over the file contents
 * (RFC 7386 merge patch) before validation.
 */
ConfigResult validate_config(const std::filesystem::path &path, const nlohmann::json &overrides = {});

/// As validate_config, for a document already in memory.
ConfigResult validate_config_json(const nlohmann::json &document, const std::filesystem::path &base_dir);

/// The effective configuration with all defaults, for the run report.
nlohmann::json to_json(const PipelineConfig &config);

} // namespace itemnet::tools

#endif // ITEMNET_TOOLS_CONFIG_HPP_

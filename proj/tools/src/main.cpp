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


// itemnet command-line driver: one subcommand per pipeline stage plus "all"
// and "validate".

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "itemnet/error.hpp"
#include "itemnet/parallel.hpp"
#include "itemnet_tools/config.hpp"
#include "itemnet_tools/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace itemnet;
using namespace itemnet::tools;

constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;
constexpr int kExitPrerequisite = 3;

struct Options {
    std::string config;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> workers;
    std::optional<double> tau;
    std::optional<std::uint64_t> threshold;
    std::optional<std::string> stopword_mode;
    std::optional<std::string> algorithms;
    std::optional<double> confidence;
    std::optional<double> margin_of_error;
    std::optional<std::size_t> min_genre_count;
    std::optional<std::size_t> gof_simulations;
    bool quiet = false;
};

void add_common(CLI::App *cmd, Options &o) {
    cmd->add_option("--config", o.config, "Pipeline config file (JSON)")->required();
    cmd->add_option("--out", o.out, "Output directory (overrides output_dir)");
    cmd->add_option("--seed", o.seed, "Master seed (overrides seed)");
    cmd->add_option("--workers", o.workers, "Worker threads (default: ITEMNET_WORKERS or 1)");
    cmd->add_option("--tau", o.tau, "Binarization threshold in (0,1]");
    cmd->add_option("--threshold", o.threshold, "Manual bigram frequency threshold");
    cmd->add_option("--stopword-mode", o.stopword_mode, "remove-before or remove-after");
    cmd->add_option("--algorithms", o.algorithms, "Comma-separated community algorithms");
    cmd->add_option("--confidence", o.confidence, "Sampling confidence level");
    cmd->add_option("--margin-of-error", o.margin_of_error, "Sampling margin of error");
    cmd->add_option("--min-genre-count", o.min_genre_count, "Genres need more items than this");
    cmd->add_option("--gof-simulations", o.gof_simulations, "Simulations for the goodness-of-fit report");
    cmd->add_flag("--quiet", o.quiet, "Do not print the stage summary");
}

json overrides_from(const Options &o) {
    json patch = json::object();
    if (!o.out.empty())
        patch["output_dir"] = std::filesystem::absolute(o.out).string();
    if (o.seed)
        patch["seed"] = *o.seed;
    if (o.tau)
        patch["projection"]["tau"] = *o.tau;
    if (o.threshold)
        patch["bigrams"]["threshold"] = *o.threshold;
    if (o.stopword_mode)
        patch["bigrams"]["stopword_mode"] = *o.stopword_mode;
    if (o.algorithms) {
        json list = json::array();
        std::string_view rest = *o.algorithms;
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            if (const auto name = rest.substr(0, comma); !name.empty())
                list.push_back(std::string(name));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
        }
        patch["cluster"]["algorithms"] = list;
    }
    if (o.confidence)
        patch["sampling"]["confidence"] = *o.confidence;
    if (o.margin_of_error)
        patch["sampling"]["margin_of_error"] = *o.margin_of_error;
    if (o.min_genre_count)
        patch["sampling"]["min_genre_count"] = *o.min_genre_count;
    if (o.gof_simulations)
        patch["ergm"]["gof_simulations"] = *o.gof_simulations;
    return patch;
}

void report_error(const std::string &code, const std::string &message, const std::string &stage,
                  const std::vector<std::string> &details = {}) {
    json record = {{"error", code}, {"message", message}};
    if (!stage.empty())
        record["stage"] = stage;
    if (!details.empty())
        record["details"] = details;
    std::cerr << record.dump() << '\n';
}

int run(const std::string &stage_name, const Options &o) {
    if (o.workers)
        set_worker_count(*o.workers);
    const ConfigResult parsed = validate_config(o.config, overrides_from(o));
    if (!parsed.config) {
        report_error("ConfigError", std::to_string(parsed.errors.size()) + " problem(s) in " + o.config, stage_name,
                     parsed.errors);
        return kExitConfig;
    }
    if (stage_name == "validate") {
        std::cout << to_json(*parsed.config).dump(2) << '\n';
        return 0;
    }
    try {
        const auto records = run_stage(*parse_stage(stage_name), *parsed.config);
        if (!o.quiet)
            for (const auto &r : records) {
                std::cout << to_string(r.stage) << ": " << r.counts.dump() << '\n';
                for (const auto &w : r.warnings)
                    std::cout << "  warning: " << w << '\n';
            }
    } catch (const Error &e) {
        report_error(std::string(itemnet::to_string(e.code())), e.what(), stage_name);
        return e.code() == Errc::MissingPrerequisite ? kExitPrerequisite
               : e.code() == Errc::ConfigError       ? kExitConfig
                                                     : kExitFailure;
    } catch (const std::exception &e) {
        report_error("InternalError", e.what(), stage_name);
        return kExitFailure;
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"itemnet: item co-consumption networks, description word clusters and ERGM fitting"};
    app.set_version_flag("--version", std::string(software_version()));
    app.require_subcommand(1);
    Options options;
    std::string chosen;

    const std::vector<std::pair<std::string, std::string>> commands{
        {"sample", "Stratified sample of catalog items"},
        {"project", "Item-user incidence and one-mode projections"},
        {"binarize", "Binarize the item projection into the item graph"},
        {"bigrams", "Bigram counts, dispersogram and the word graph"},
        {"cluster", "Community detection on the word graph"},
        {"features", "Per-item cluster word counts and word frequencies"},
        {"stats", "Topology summary and k-core of the item graph"},
        {"ergm", "Fit the ERGM and its goodness-of-fit report"},
        {"all", "Run every stage in order"},
        {"validate", "Check a config file and print it with defaults filled"},
    };
    for (const auto &[name, help] : commands) {
        CLI::App *cmd = app.add_subcommand(name, help);
        add_common(cmd, options);
        cmd->callback([&chosen, name = name] { chosen = name; });
    }
    CLI11_PARSE(app, argc, argv);
    return run(chosen, options);
}

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


#include "itemnet_tools/config.hpp"

#include <fstream>
#include <set>

#include "itemnet/error.hpp"

namespace itemnet::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Reader {
public:
    explicit Reader(std::vector<std::string> &errors) : errors_(errors) {}

    void fail(const std::string &message) { errors_.push_back(message); }

    // Object member `key` of `parent`, or nullptr when absent or not an object.
    const json *section(const json &parent, const std::string &key, const std::string &path) {
        if (!parent.contains(key))
            return nullptr;
        const json &node = parent.at(key);
        if (!node.is_object()) {
            fail(path + ": expected an object");
            return nullptr;
        }
        return &node;
    }

    void allow(const json &object, const std::string &path, std::initializer_list<std::string_view> keys) {
        const std::set<std::string_view> allowed(keys);
        for (const auto &[key, value] : object.items())
            if (!allowed.contains(key))
                fail((path.empty() ? "" : path + ".") + key + ": unknown key");
    }

    void text(const json &object, const std::string &key, const std::string &path, std::string &out) {
        if (!object.contains(key))
            return;
        if (!object.at(key).is_string())
            fail(path + ": expected a string");
        else
            out = object.at(key).get<std::string>();
    }

    void flag(const json &object, const std::string &key, const std::string &path, bool &out) {
        if (!object.contains(key))
            return;
        if (!object.at(key).is_boolean())
            fail(path + ": expected true or false");
        else
            out = object.at(key).get<bool>();
    }

    void real(const json &object, const std::string &key, const std::string &path, double &out) {
        if (!object.contains(key))
            return;
        if (!object.at(key).is_number())
            fail(path + ": expected a number");
        else
            out = object.at(key).get<double>();
    }

    template <typename Unsigned>
    bool count(const json &object, const std::string &key, const std::string &path, Unsigned &out) {
        if (!object.contains(key))
            return false;
        const json &v = object.at(key);
        if (v.is_number_unsigned()) {
            out = static_cast<Unsigned>(v.get<std::uint64_t>());
            return true;
        }
        if (v.is_number_integer() && v.get<std::int64_t>() >= 0) {
            out = static_cast<Unsigned>(v.get<std::int64_t>());
            return true;
        }
        if (v.is_number_float() && v.get<double>() >= 0.0 && v.get<double>() == std::floor(v.get<double>()) &&
            v.get<double>() < 1.8e19) {
            out = static_cast<Unsigned>(v.get<double>());
            return true;
        }
        fail(path + ": expected a nonnegative integer");
        return false;
    }

    void strings(const json &object, const std::string &key, const std::string &path, std::vector<std::string> &out) {
        if (!object.contains(key))
            return;
        const json &v = object.at(key);
        if (!v.is_array() || !std::all_of(v.begin(), v.end(), [](const json &e) { return e.is_string(); })) {
            fail(path + ": expected a list of strings");
            return;
        }
        out = v.get<std::vector<std::string>>();
    }

private:
    std::vector<std::string> &errors_;
};

fs::path resolve(const fs::path &base, const std::string &value) {
    const fs::path p(value);
    return (p.is_absolute() ? p : base / p).lexically_normal();
}

bool inside(const fs::path &path, const fs::path &dir) {
    const fs::path a = fs::weakly_canonical(path);
    const fs::path b = fs::weakly_canonical(dir);
    auto [end_b, end_a] = std::mismatch(b.begin(), b.end(), a.begin(), a.end());
    return end_b == b.end();
}

} // namespace

ConfigResult validate_config_json(const json &doc, const fs::path &base_dir) {
    ConfigResult result;
    auto &errors = result.errors;
    Reader r(errors);
    PipelineConfig c;

    if (!doc.is_object()) {
        errors.emplace_back("config: expected a JSON object");
        return result;
    }
    r.allow(doc, "", {"seed", "output_dir", "inputs", "columns", "sampling", "projection", "bigrams", "cluster",
                      "features", "stats", "ergm"});

    if (!doc.contains("seed"))
        r.fail("seed: required");
    else
        r.count(doc, "seed", "seed", c.seed);

    std::string out;
    r.text(doc, "output_dir", "output_dir", out);
    if (out.empty())
        r.fail("output_dir: required");
    else
        c.output_dir = resolve(base_dir, out);

    std::string catalog, interactions;
    if (const json *in = r.section(doc, "inputs", "inputs")) {
        r.allow(*in, "inputs", {"catalog", "interactions", "stopwords"});
        r.text(*in, "catalog", "inputs.catalog", catalog);
        r.text(*in, "interactions", "inputs.interactions", interactions);
        r.text(*in, "stopwords", "inputs.stopwords", c.stopwords);
    }
    if (catalog.empty())
        r.fail("inputs.catalog: required");
    else
        c.catalog = resolve(base_dir, catalog);
    if (interactions.empty())
        r.fail("inputs.interactions: required");
    else
        c.interactions = resolve(base_dir, interactions);
    if (c.stopwords.empty())
        r.fail("inputs.stopwords: must be \"builtin\" or a path");
    else if (c.stopwords != "builtin")
        c.stopwords = resolve(base_dir, c.stopwords).string();

    if (!c.output_dir.empty()) {
        std::vector<std::pair<std::string, fs::path>> inputs{{"inputs.catalog", c.catalog},
                                                             {"inputs.interactions", c.interactions}};
        if (c.stopwords != "builtin")
            inputs.emplace_back("inputs.stopwords", c.stopwords);
        for (const auto &[name, p] : inputs)
            if (!p.empty() && inside(p, c.output_dir))
                r.fail(name + ": must not lie inside output_dir");
    }

    if (const json *cols = r.section(doc, "columns", "columns")) {
        r.allow(*cols, "columns", {"catalog", "interactions"});
        if (const json *cat = r.section(*cols, "catalog", "columns.catalog")) {
            r.allow(*cat, "columns.catalog", {"item_id", "title", "score", "genres", "description"});
            auto &cc = c.catalog_columns;
            r.text(*cat, "item_id", "columns.catalog.item_id", cc.item_id);
            r.text(*cat, "title", "columns.catalog.title", cc.title);
            r.text(*cat, "score", "columns.catalog.score", cc.score);
            r.text(*cat, "genres", "columns.catalog.genres", cc.genres);
            r.text(*cat, "description", "columns.catalog.description", cc.description);
        }
        if (const json *ic = r.section(*cols, "interactions", "columns.interactions")) {
            r.allow(*ic, "columns.interactions", {"user_id", "item_id"});
            r.text(*ic, "user_id", "columns.interactions.user_id", c.interaction_columns.user_id);
            r.text(*ic, "item_id", "columns.interactions.item_id", c.interaction_columns.item_id);
        }
    }

    if (const json *s = r.section(doc, "sampling", "sampling")) {
        r.allow(*s, "sampling", {"confidence", "margin_of_error", "min_genre_count", "excluded_genres"});
        r.real(*s, "confidence", "sampling.confidence", c.sampling.confidence);
        r.real(*s, "margin_of_error", "sampling.margin_of_error", c.sampling.margin_of_error);
        r.count(*s, "min_genre_count", "sampling.min_genre_count", c.sampling.min_genre_count);
        std::vector<std::string> excluded(c.sampling.excluded_genres.begin(), c.sampling.excluded_genres.end());
        r.strings(*s, "excluded_genres", "sampling.excluded_genres", excluded);
        c.sampling.excluded_genres = {excluded.begin(), excluded.end()};
    }
    if (!(c.sampling.confidence > 0.0 && c.sampling.confidence < 1.0))
        r.fail("sampling.confidence out of (0,1)");
    if (!(c.sampling.margin_of_error > 0.0))
        r.fail("sampling.margin_of_error must be positive");

    if (const json *p = r.section(doc, "projection", "projection")) {
        r.allow(*p, "projection", {"tau", "write_user_projection", "drop_isolated"});
        r.real(*p, "tau", "projection.tau", c.tau);
        r.flag(*p, "write_user_projection", "projection.write_user_projection", c.write_user_projection);
        r.flag(*p, "drop_isolated", "projection.drop_isolated", c.drop_isolated);
    }
    if (!(c.tau > 0.0 && c.tau <= 1.0))
        r.fail("tau out of (0,1]");

    if (const json *b = r.section(doc, "bigrams", "bigrams")) {
        r.allow(*b, "bigrams", {"stopword_mode", "threshold", "dispersogram_max"});
        std::string mode(to_string(c.stopword_mode));
        r.text(*b, "stopword_mode", "bigrams.stopword_mode", mode);
        if (auto parsed = parse_stopword_mode(mode))
            c.stopword_mode = *parsed;
        else
            r.fail("bigrams.stopword_mode: expected remove-before or remove-after");
        if (b->contains("threshold")) {
            const json &t = b->at("threshold");
            std::uint64_t value = 0;
            if (t.is_object()) {
                r.allow(t, "bigrams.threshold", {"rule", "value", "window", "tolerance"});
                std::string rule = "manual";
                r.text(t, "rule", "bigrams.threshold.rule", rule);
                if (rule == "manual") {
                    ManualThreshold m;
                    r.count(t, "value", "bigrams.threshold.value", m.threshold);
                    c.threshold_rule = m;
                } else if (rule == "plateau") {
                    PlateauThreshold pl;
                    r.count(t, "window", "bigrams.threshold.window", pl.window);
                    r.real(t, "tolerance", "bigrams.threshold.tolerance", pl.tolerance);
                    if (pl.window == 0)
                        r.fail("bigrams.threshold.window must be positive");
                    if (!(pl.tolerance > 0.0))
                        r.fail("bigrams.threshold.tolerance must be positive");
                    c.threshold_rule = pl;
                } else {
                    r.fail("bigrams.threshold.rule: expected manual or plateau");
                }
            } else if (r.count(*b, "threshold", "bigrams.threshold", value)) {
                c.threshold_rule = ManualThreshold{value};
            }
        }
        r.count(*b, "dispersogram_max", "bigrams.dispersogram_max", c.dispersogram_max);
    }
    if (const auto *m = std::get_if<ManualThreshold>(&c.threshold_rule); m && m->threshold == 0)
        r.fail("bigrams.threshold must be at least 1");
    if (c.dispersogram_max == 0)
        r.fail("bigrams.dispersogram_max must be at least 1");

    if (const json *cl = r.section(doc, "cluster", "cluster")) {
        r.allow(*cl, "cluster", {"algorithms", "weighted_modularity", "walktrap_steps", "label_propagation_max_passes",
                                 "louvain_max_passes", "spinglass"});
        std::vector<std::string> names;
        r.strings(*cl, "algorithms", "cluster.algorithms", names);
        if (cl->contains("algorithms")) {
            c.algorithms.clear();
            for (const auto &name : names) {
                try {
                    const Algorithm a = parse_algorithm(name);
                    if (std::find(c.algorithms.begin(), c.algorithms.end(), a) == c.algorithms.end())
                        c.algorithms.push_back(a);
                } catch (const Error &) {
                    r.fail("cluster.algorithms: unsupported algorithm '" + name + "'");
                }
            }
            if (c.algorithms.empty() && names.empty())
                r.fail("cluster.algorithms: at least one algorithm is required");
        }
        r.flag(*cl, "weighted_modularity", "cluster.weighted_modularity", c.weighted_modularity);
        r.count(*cl, "walktrap_steps", "cluster.walktrap_steps", c.detect.walktrap_steps);
        r.count(*cl, "label_propagation_max_passes", "cluster.label_propagation_max_passes",
                c.detect.label_propagation_max_passes);
        r.count(*cl, "louvain_max_passes", "cluster.louvain_max_passes", c.detect.louvain_max_passes);
        if (const json *sg = r.section(*cl, "spinglass", "cluster.spinglass")) {
            auto &o = c.detect.spinglass;
            r.allow(*sg, "cluster.spinglass", {"gamma", "spins", "start_temperature", "cooling_factor",
                                               "stop_temperature", "sweeps_per_temperature", "per_component"});
            r.real(*sg, "gamma", "cluster.spinglass.gamma", o.gamma);
            r.count(*sg, "spins", "cluster.spinglass.spins", o.spins);
            r.real(*sg, "start_temperature", "cluster.spinglass.start_temperature", o.start_temperature);
            r.real(*sg, "cooling_factor", "cluster.spinglass.cooling_factor", o.cooling_factor);
            r.real(*sg, "stop_temperature", "cluster.spinglass.stop_temperature", o.stop_temperature);
            r.count(*sg, "sweeps_per_temperature", "cluster.spinglass.sweeps_per_temperature",
                    o.sweeps_per_temperature);
            r.flag(*sg, "per_component", "cluster.spinglass.per_component", o.per_component);
            if (!(o.cooling_factor > 0.0 && o.cooling_factor < 1.0))
                r.fail("cluster.spinglass.cooling_factor out of (0,1)");
            if (!(o.stop_temperature > 0.0 && o.start_temperature > o.stop_temperature))
                r.fail("cluster.spinglass: need start_temperature > stop_temperature > 0");
            if (o.spins == 0)
                r.fail("cluster.spinglass.spins must be positive");
        }
        if (c.detect.walktrap_steps == 0)
            r.fail("cluster.walktrap_steps must be positive");
    }

    if (const json *f = r.section(doc, "features", "features")) {
        r.allow(*f, "features", {"presence_only"});
        r.flag(*f, "presence_only", "features.presence_only", c.presence_only);
    }

    if (const json *st = r.section(doc, "stats", "stats")) {
        r.allow(*st, "stats", {"clique_time_budget_seconds", "clique_max_search_nodes", "kcore_rule",
                               "centrality_tolerance", "centrality_max_iterations"});
        double seconds = c.clique.time.count();
        r.real(*st, "clique_time_budget_seconds", "stats.clique_time_budget_seconds", seconds);
        if (!(seconds > 0.0))
            r.fail("stats.clique_time_budget_seconds must be positive");
        c.clique.time = std::chrono::duration<double>(seconds);
        r.count(*st, "clique_max_search_nodes", "stats.clique_max_search_nodes", c.clique.max_search_nodes);
        if (st->contains("kcore_rule")) {
            const json &k = st->at("kcore_rule");
            if (k.is_string() && k.get<std::string>() == "below-median") {
                c.kcore_rule = BelowMedianCore{};
            } else if (k.is_object() && k.contains("at_least") && k.size() == 1) {
                AtLeastCore rule;
                if (r.count(k, "at_least", "stats.kcore_rule.at_least", rule.k))
                    c.kcore_rule = rule;
            } else {
                r.fail("stats.kcore_rule: expected \"below-median\" or {\"at_least\": k}");
            }
        }
        r.real(*st, "centrality_tolerance", "stats.centrality_tolerance", c.centrality.tolerance);
        r.count(*st, "centrality_max_iterations", "stats.centrality_max_iterations", c.centrality.max_iterations);
        if (!(c.centrality.tolerance > 0.0))
            r.fail("stats.centrality_tolerance must be positive");
    }

    if (const json *e = r.section(doc, "ergm", "ergm")) {
        r.allow(*e, "ergm", {"terms", "standardize", "gof_simulations", "export_design"});
        r.strings(*e, "terms", "ergm.terms", c.ergm_terms);
        r.flag(*e, "standardize", "ergm.standardize", c.standardize);
        r.count(*e, "gof_simulations", "ergm.gof_simulations", c.gof_simulations);
        r.flag(*e, "export_design", "ergm.export_design", c.export_design);
        if (c.gof_simulations == 0)
            r.fail("ergm.gof_simulations must be at least 1");
    }
    if (std::count(c.ergm_terms.begin(), c.ergm_terms.end(), "edges") != 1)
        r.fail("ergm.terms: exactly one \"edges\" term is required");

    c.detect.seed = c.seed;
    if (errors.empty())
        result.config = std::move(c);
    return result;
}

ConfigResult validate_config(const fs::path &path, const json &overrides) {
    std::ifstream in(path);
    if (!in) {
        ConfigResult result;
        result.errors.push_back("cannot read config file " + path.string());
        return result;
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        ConfigResult result;
        result.errors.push_back("config is not valid JSON: " + std::string(e.what()));
        return result;
    }
    if (!overrides.is_null())
        doc.merge_patch(overrides);
    return validate_config_json(doc, fs::absolute(path).parent_path());
}

json to_json(const PipelineConfig &c) {
    json threshold;
    if (const auto *m = std::get_if<ManualThreshold>(&c.threshold_rule))
        threshold = {{"rule", "manual"}, {"value", m->threshold}};
    else {
        const auto &p = std::get<PlateauThreshold>(c.threshold_rule);
        threshold = {{"rule", "plateau"}, {"window", p.window}, {"tolerance", p.tolerance}};
    }
    json algorithms = json::array();
    for (Algorithm a : c.algorithms)
        algorithms.push_back(std::string(to_string(a)));
    json kcore_rule = "below-median";
    if (const auto *k = std::get_if<AtLeastCore>(&c.kcore_rule))
        kcore_rule = {{"at_least", k->k}};
    const auto &sg = c.detect.spinglass;
    return {
        {"seed", c.seed},
        {"output_dir", c.output_dir.string()},
        {"inputs", {{"catalog", c.catalog.string()}, {"interactions", c.interactions.string()},
                    {"stopwords", c.stopwords}}},
        {"columns",
         {{"catalog",
           {{"item_id", c.catalog_columns.item_id},
            {"title", c.catalog_columns.title},
            {"score", c.catalog_columns.score},
            {"genres", c.catalog_columns.genres},
            {"description", c.catalog_columns.description}}},
          {"interactions",
           {{"user_id", c.interaction_columns.user_id}, {"item_id", c.interaction_columns.item_id}}}}},
        {"sampling",
         {{"confidence", c.sampling.confidence},
          {"margin_of_error", c.sampling.margin_of_error},
          {"min_genre_count", c.sampling.min_genre_count},
          {"excluded_genres", std::vector<std::string>(c.sampling.excluded_genres.begin(),
                                                       c.sampling.excluded_genres.end())}}},
        {"projection",
         {{"tau", c.tau}, {"write_user_projection", c.write_user_projection}, {"drop_isolated", c.drop_isolated}}},
        {"bigrams",
         {{"stopword_mode", std::string(to_string(c.stopword_mode))},
          {"threshold", threshold},
          {"dispersogram_max", c.dispersogram_max}}},
        {"cluster",
         {{"algorithms", algorithms},
          {"weighted_modularity", c.weighted_modularity},
          {"walktrap_steps", c.detect.walktrap_steps},
          {"label_propagation_max_passes", c.detect.label_propagation_max_passes},
          {"louvain_max_passes", c.detect.louvain_max_passes},
          {"spinglass",
           {{"gamma", sg.gamma},
            {"spins", sg.spins},
            {"start_temperature", sg.start_temperature},
            {"cooling_factor", sg.cooling_factor},
            {"stop_temperature", sg.stop_temperature},
            {"sweeps_per_temperature", sg.sweeps_per_temperature},
            {"per_component", sg.per_component}}}}},
        {"features", {{"presence_only", c.presence_only}}},
        {"stats",
         {{"clique_time_budget_seconds", c.clique.time.count()},
          {"clique_max_search_nodes", c.clique.max_search_nodes},
          {"kcore_rule", kcore_rule},
          {"centrality_tolerance", c.centrality.tolerance},
          {"centrality_max_iterations", c.centrality.max_iterations}}},
        {"ergm",
         {{"terms", c.ergm_terms},
          {"standardize", c.standardize},
          {"gof_simulations", c.gof_simulations},
          {"export_design", c.export_design}}},
    };
}

} // namespace itemnet::tools

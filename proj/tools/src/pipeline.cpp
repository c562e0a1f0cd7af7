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


#include "itemnet_tools/pipeline.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "itemnet/bipartite.hpp"
#include "itemnet/delimited.hpp"
#include "itemnet/ergm.hpp"
#include "itemnet/error.hpp"
#include "itemnet/features.hpp"
#include "itemnet/graph_io.hpp"
#include "itemnet/random.hpp"

#ifndef ITEMNET_VERSION
#define ITEMNET_VERSION "unknown"
#endif

namespace itemnet::tools {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const EdgeListColumns kItemEdgeColumns{"item_id_a", "item_id_b", ""};
const EdgeListColumns kWordEdgeColumns{"word_a", "word_b", "weight"};

class Workspace {
public:
    explicit Workspace(const PipelineConfig &config) : config_(config), dir_(config.output_dir) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec)
            throw Error(Errc::IoError, "cannot create output directory " + dir_.string() + ": " + ec.message());
    }

    fs::path path(const char *name) const { return dir_ / name; }

    // Path of an artifact an earlier stage must have written.
    fs::path require(const char *name, Stage producer) const {
        fs::path p = path(name);
        if (!fs::exists(p))
            throw Error(Errc::MissingPrerequisite, std::string(name) + " not found in " + dir_.string() + "; run the '" +
                                                       std::string(to_string(producer)) + "' stage first");
        return p;
    }

    void write(const char *name, const std::function<void(std::ostream &)> &body) const {
        const fs::path target = path(name);
        const fs::path temp = target.string() + ".tmp";
        {
            std::ofstream out(temp, std::ios::binary | std::ios::trunc);
            if (!out)
                throw Error(Errc::IoError, "cannot write " + temp.string());
            body(out);
            out.flush();
            if (!out)
                throw Error(Errc::IoError, "write failed for " + temp.string());
        }
        fs::rename(temp, target);
    }

    const PipelineConfig &config() const { return config_; }

private:
    const PipelineConfig &config_;
    fs::path dir_;
};

Catalog read_catalog(const PipelineConfig &c) { return load_catalog(c.catalog, c.catalog_columns); }

void run_sample(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const Catalog catalog = read_catalog(c);
    SamplingParams params = c.sampling;
    params.seed = c.seed;
    const SampleResult result = stratified_sample(catalog, params);
    ws.write(artifact::sample_plan, [&](std::ostream &o) { write_sample_plan(o, result.plan); });
    ws.write(artifact::sampled_items, [&](std::ostream &o) { write_node_list(o, result.items); });

    std::size_t scored = 0;
    for (const auto &e : catalog)
        scored += e.score.has_value();
    rec.counts = {{"catalog_items", catalog.size()},
                  {"scored_items", scored},
                  {"strata", result.plan.per_genre.size()},
                  {"draws", result.plan.total_drawn()},
                  {"sampled_items", result.items.size()}};
    rec.warnings = result.warnings;
}

void run_project(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const auto items = read_node_list(ws.require(artifact::sampled_items, Stage::Sample));
    const InteractionSet interactions = load_interactions(c.interactions, c.interaction_columns);
    const IncidenceBuild build = build_incidence(interactions, items);
    const BipartiteGraph &b = build.graph;
    const WeightedGraph w = project_items(b);
    ws.write(artifact::item_projection, [&](std::ostream &o) { write_projection(o, w); });
    ws.write(artifact::item_degrees, [&](std::ostream &o) {
        write_delimited_row(o, std::vector<std::string>{"item_id", "users"});
        for (std::size_t i = 0; i < b.num_items(); ++i)
            write_delimited_row(o, std::vector<std::string>{b.item_ids()[i], std::to_string(b.item_degree(i))});
    });
    rec.counts = {{"users", b.num_users()},
                  {"items", b.num_items()},
                  {"links", b.num_links()},
                  {"duplicate_interactions", interactions.duplicates_removed()},
                  {"interactions_outside_sample", build.dropped_interactions},
                  {"item_pairs_with_shared_users", w.support_size()}};
    if (c.write_user_projection) {
        const WeightedGraph u = project_users(b);
        ws.write(artifact::user_projection,
                 [&](std::ostream &o) { write_projection(o, u, "user_id_a", "user_id_b"); });
        rec.counts["user_pairs_with_shared_items"] = u.support_size();
    }
}

WeightedGraph read_projection(const fs::path &path, const std::vector<std::string> &items) {
    std::map<std::string, std::uint32_t> index;
    for (std::size_t i = 0; i < items.size(); ++i)
        index.emplace(items[i], static_cast<std::uint32_t>(i));
    const auto rows = read_delimited(path);
    if (rows.empty() || rows.front().fields != std::vector<std::string>{"item_id_a", "item_id_b", "weight"})
        throw Error(Errc::MissingColumn, path.string() + ": expected columns item_id_a,item_id_b,weight");
    std::vector<std::vector<WeightedGraph::Entry>> adj(items.size());
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &f = rows[r].fields;
        const std::string context = path.string() + " line " + std::to_string(rows[r].line);
        if (f.size() != 3)
            throw Error(Errc::ParseError, context + ": expected 3 fields");
        const auto a = index.find(f[0]);
        const auto b = index.find(f[1]);
        if (a == index.end() || b == index.end())
            throw Error(Errc::ParseError, context + ": unknown item");
        std::uint32_t weight = 0;
        const auto [end, ec] = std::from_chars(f[2].data(), f[2].data() + f[2].size(), weight);
        if (ec != std::errc{} || end != f[2].data() + f[2].size())
            throw Error(Errc::ParseError, context + ": weight is not an integer");
        adj[a->second].push_back({b->second, weight});
        adj[b->second].push_back({a->second, weight});
    }
    for (auto &row : adj)
        std::sort(row.begin(), row.end(), [](const auto &x, const auto &y) { return x.node < y.node; });
    return WeightedGraph(items, std::move(adj));
}

void run_binarize(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const auto degree_rows = read_delimited(ws.require(artifact::item_degrees, Stage::Project));
    std::vector<std::string> items;
    std::vector<std::size_t> degrees;
    for (std::size_t r = 1; r < degree_rows.size(); ++r) {
        items.push_back(degree_rows[r].fields.at(0));
        degrees.push_back(std::stoull(degree_rows[r].fields.at(1)));
    }
    const WeightedGraph w = read_projection(ws.require(artifact::item_projection, Stage::Project), items);
    Graph g = binarize(w, degrees, c.tau);

    std::size_t isolated = 0;
    std::vector<node_index> keep;
    for (node_index v = 0; v < g.num_nodes(); ++v) {
        if (g.degree(v) == 0)
            ++isolated;
        else
            keep.push_back(v);
    }
    if (c.drop_isolated)
        g = g.induced_subgraph(keep);

    ws.write(artifact::item_graph_nodes, [&](std::ostream &o) { write_node_list(o, g.labels()); });
    ws.write(artifact::item_graph_edges, [&](std::ostream &o) { write_edge_list(o, g, kItemEdgeColumns); });
    ws.write(artifact::item_graph_graphml, [&](std::ostream &o) { write_graphml(o, g); });
    rec.counts = {{"nodes", g.num_nodes()}, {"edges", g.num_edges()}, {"isolated_items", isolated}};
    rec.decisions = {{"tau", c.tau}, {"isolated_items_dropped", c.drop_isolated}};
}

Graph read_item_graph(const Workspace &ws) {
    const auto nodes = read_node_list(ws.require(artifact::item_graph_nodes, Stage::Binarize));
    return read_edge_list(ws.require(artifact::item_graph_edges, Stage::Binarize), nodes, kItemEdgeColumns);
}

Graph read_bigram_graph(const Workspace &ws) {
    const auto nodes = read_node_list(ws.require(artifact::bigram_graph_nodes, Stage::Bigrams));
    return read_edge_list(ws.require(artifact::bigram_graph_edges, Stage::Bigrams), nodes, kWordEdgeColumns);
}

void run_bigrams(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const Catalog catalog = read_catalog(c);
    const StopwordList stopwords = load_stopwords(c.stopwords);
    const auto corpus = tokenize_catalog(catalog);
    const BigramCounts counts = extract_bigrams(corpus, stopwords, c.stopword_mode);

    std::vector<std::uint64_t> thresholds(c.dispersogram_max);
    for (std::uint64_t t = 0; t < c.dispersogram_max; ++t)
        thresholds[t] = t + 1;
    const auto series = dispersogram(counts, thresholds);
    const ThresholdChoice choice = select_threshold(series, c.threshold_rule);
    const BigramGraph bg = build_bigram_graph(counts, choice.threshold);

    ws.write(artifact::bigram_counts, [&](std::ostream &o) { write_bigram_counts(o, counts); });
    ws.write(artifact::dispersogram, [&](std::ostream &o) { write_dispersogram(o, series); });
    ws.write(artifact::bigram_graph_nodes, [&](std::ostream &o) { write_node_list(o, bg.graph.labels()); });
    ws.write(artifact::bigram_graph_edges, [&](std::ostream &o) { write_edge_list(o, bg.graph, kWordEdgeColumns); });

    std::size_t tokens = 0;
    for (const auto &d : corpus)
        tokens += d.tokens.size();
    rec.counts = {{"documents", corpus.size()},
                  {"tokens", tokens},
                  {"distinct_bigrams", counts.counts.size()},
                  {"bigram_occurrences", counts.total()},
                  {"words", bg.graph.num_nodes()},
                  {"word_edges", bg.graph.num_edges()}};
    rec.decisions = {{"stopword_mode", std::string(to_string(c.stopword_mode))},
                     {"stopwords", stopwords.source},
                     {"threshold", choice.threshold}};
    if (choice.warning)
        rec.warnings.push_back(*choice.warning);
}

void run_cluster(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const Graph g = read_bigram_graph(ws);
    const Graph scored = c.weighted_modularity ? g : g.unweighted();
    const BestPartition best = best_partition(scored, c.algorithms, c.detect);
    ws.write(artifact::modularity, [&](std::ostream &o) { write_modularity_report(o, best.report, false); });
    ws.write(artifact::partition, [&](std::ostream &o) { write_partition(o, g, best.partition); });
    const auto ranking = rank_cluster_words(g, best.partition, c.centrality);
    ws.write(artifact::cluster_words, [&](std::ostream &o) { write_ranked_words(o, ranking); });

    json runtimes = json::object();
    for (const auto &row : best.report.rows)
        runtimes[row.algorithm] = row.runtime.count();
    rec.counts = {{"words", g.num_nodes()}, {"clusters", best.partition.num_clusters()}};
    rec.decisions = {{"winning_algorithm", best.report.winner},
                     {"weighted_modularity", c.weighted_modularity},
                     {"algorithm_seconds", runtimes}};
}

// Lexicon from the partition artifact: cluster k holds the words labelled k.
ClusterLexicon read_lexicon(const Workspace &ws) {
    const auto rows = read_delimited(ws.require(artifact::partition, Stage::Cluster));
    if (rows.empty() || rows.front().fields != std::vector<std::string>{"word", "cluster"})
        throw Error(Errc::MissingColumn, std::string(artifact::partition) + ": expected columns word,cluster");
    std::vector<std::set<std::string>> clusters;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &f = rows[r].fields;
        const std::size_t k = std::stoull(f.at(1));
        if (k == 0)
            throw Error(Errc::ParseError, std::string(artifact::partition) + ": clusters are numbered from 1");
        if (clusters.size() < k)
            clusters.resize(k);
        clusters[k - 1].insert(f.at(0));
    }
    return ClusterLexicon(std::move(clusters));
}

void run_features(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const auto sampled = read_node_list(ws.require(artifact::sampled_items, Stage::Sample));
    const ClusterLexicon lexicon = read_lexicon(ws);
    const Catalog catalog = read_catalog(c);
    const auto corpus = tokenize_catalog(catalog);

    const std::set<std::string> in_sample(sampled.begin(), sampled.end());
    std::vector<TokenizedDoc> sample_docs;
    for (const auto &doc : corpus)
        if (in_sample.contains(doc.item_id))
            sample_docs.push_back(doc);
    const CovariateTable table = build_covariates(sample_docs, lexicon, c.presence_only);
    const auto frequencies = word_frequencies(corpus, load_stopwords(c.stopwords));

    ws.write(artifact::lexicon, [&](std::ostream &o) {
        for (std::size_t k = 0; k < lexicon.num_clusters(); ++k) {
            o << "cluster " << k + 1 << ':';
            const char *sep = " ";
            for (const auto &w : lexicon.words(k)) {
                o << sep << w;
                sep = ", ";
            }
            o << '\n';
        }
    });
    ws.write(artifact::covariates, [&](std::ostream &o) { write_covariates(o, table); });
    ws.write(artifact::word_frequencies, [&](std::ostream &o) { write_word_frequencies(o, frequencies); });
    rec.counts = {{"sampled_items", sampled.size()},
                  {"items_with_covariates", table.num_items()},
                  {"sampled_items_without_description", sampled.size() - table.num_items()},
                  {"clusters", lexicon.num_clusters()},
                  {"distinct_words", frequencies.size()}};
    rec.decisions = {{"presence_only", c.presence_only}};
}

void run_stats(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const Graph g = read_item_graph(ws);
    const TopologySummary s = summarize(g, c.clique);
    ws.write(artifact::topology, [&](std::ostream &o) { write_topology_summary(o, s); });

    const CoreDecomposition cores = kcore(g);
    ws.write(artifact::kcore, [&](std::ostream &o) {
        write_delimited_row(o, std::vector<std::string>{"item_id", "core"});
        for (node_index v = 0; v < g.num_nodes(); ++v)
            write_delimited_row(o, std::vector<std::string>{g.label(v), std::to_string(cores.core_number[v])});
    });
    std::vector<node_index> selected;
    try {
        selected = select_core_nodes(cores, c.kcore_rule);
    } catch (const Error &e) {
        if (e.code() != Errc::EmptySelection)
            throw;
        rec.warnings.push_back(std::string("EmptySelection: ") + e.what() + "; the k-core subgraph is empty");
    }
    const Graph sub = g.induced_subgraph(selected);
    std::map<std::string, std::vector<long long>> attrs;
    auto &core_attr = attrs["core"];
    for (node_index v : selected)
        core_attr.push_back(static_cast<long long>(cores.core_number[v]));
    ws.write(artifact::kcore_graphml, [&](std::ostream &o) { write_graphml(o, sub, attrs); });
    ws.write(artifact::kcore_dot, [&](std::ostream &o) { write_dot(o, sub, attrs); });

    rec.counts = {{"nodes", s.nodes},
                  {"edges", s.edges},
                  {"unreachable_pairs", s.unreachable_pairs},
                  {"degeneracy", cores.degeneracy()},
                  {"kcore_subgraph_nodes", sub.num_nodes()}};
    rec.decisions = {{"clique_number_exact", s.clique_exact},
                     {"kcore_rule", std::holds_alternative<BelowMedianCore>(c.kcore_rule)
                                        ? json("below-median")
                                        : json{{"at_least", std::get<AtLeastCore>(c.kcore_rule).k}}}};
    if (!s.clique_exact)
        rec.warnings.push_back("clique search stopped by its budget; the clique number is a lower bound");
}

void run_ergm(const Workspace &ws, StageRecord &rec) {
    const auto &c = ws.config();
    const Graph g = read_item_graph(ws);
    const CovariateTable table = load_covariates(ws.require(artifact::covariates, Stage::Features).string());

    // The model covers items that have covariates, i.e. a description.
    std::vector<node_index> keep;
    for (node_index v = 0; v < g.num_nodes(); ++v)
        if (table.find(g.label(v)) < table.num_items())
            keep.push_back(v);
    const Graph network = g.induced_subgraph(keep);
    const auto terms = parse_terms(c.ergm_terms, table);
    const DyadDesign design = build_design(network, table, terms, {c.standardize});
    const ErgmFit result = fit(design);
    ws.write(artifact::ergm_coefficients, [&](std::ostream &o) { write_coefficients(o, result); });

    const GofReport report = gof(result, network, design, c.gof_simulations, substream_seed(c.seed, fnv1a("gof")));
    ws.write(artifact::ergm_gof, [&](std::ostream &o) { write_gof(o, report); });
    if (c.export_design)
        ws.write(artifact::ergm_design, [&](std::ostream &o) { write_design(o, design); });

    rec.counts = {{"items_in_graph", g.num_nodes()},
                  {"items_in_model", network.num_nodes()},
                  {"items_without_covariates", g.num_nodes() - network.num_nodes()},
                  {"dyads", design.num_rows()},
                  {"edges", network.num_edges()}};
    rec.decisions = {{"converged", result.converged},
                     {"iterations", result.iterations},
                     {"log_likelihood", result.log_likelihood},
                     {"separation", result.separation},
                     {"aliased_terms", result.aliased},
                     {"standardized_covariates", c.standardize},
                     {"gof_simulations", c.gof_simulations}};
    rec.warnings = result.warnings;
}

json record_to_json(const StageRecord &r) {
    return {{"stage", std::string(to_string(r.stage))},
            {"seconds", r.seconds},
            {"counts", r.counts},
            {"decisions", r.decisions},
            {"warnings", r.warnings}};
}

// Replaces (or appends) the entries of the stages just run, keeping one entry per stage.
void update_report(const Workspace &ws, const PipelineConfig &config, const std::vector<StageRecord> &records) {
    json report;
    const fs::path path = ws.path(artifact::run_report);
    if (fs::exists(path)) {
        try {
            report = json::parse(read_text_file(path));
        } catch (const json::exception &) {
            report = json();
        }
    }
    if (!report.is_object() || !report.contains("stages") || !report["stages"].is_array())
        report = {{"stages", json::array()}};
    report["software_version"] = std::string(software_version());
    report["config"] = to_json(config);
    json &stages = report["stages"];
    for (const auto &r : records) {
        const std::string name(to_string(r.stage));
        auto it = std::find_if(stages.begin(), stages.end(), [&](const json &s) { return s.value("stage", "") == name; });
        if (it != stages.end())
            *it = record_to_json(r);
        else
            stages.push_back(record_to_json(r));
    }
    ws.write(artifact::run_report, [&](std::ostream &o) { o << report.dump(2) << '\n'; });
}

} // namespace

std::string_view software_version() { return ITEMNET_VERSION; }

std::string_view to_string(Stage stage) {
    switch (stage) {
    case Stage::Sample:
        return "sample";
    case Stage::Project:
        return "project";
    case Stage::Binarize:
        return "binarize";
    case Stage::Bigrams:
        return "bigrams";
    case Stage::Cluster:
        return "cluster";
    case Stage::Features:
        return "features";
    case Stage::Stats:
        return "stats";
    case Stage::Ergm:
        return "ergm";
    case Stage::All:
        return "all";
    }
    return "?";
}

std::optional<Stage> parse_stage(std::string_view name) {
    for (Stage s : {Stage::Sample, Stage::Project, Stage::Binarize, Stage::Bigrams, Stage::Cluster, Stage::Features,
                    Stage::Stats, Stage::Ergm, Stage::All})
        if (to_string(s) == name)
            return s;
    return std::nullopt;
}

const std::vector<Stage> &stage_order() {
    static const std::vector<Stage> order{Stage::Sample,  Stage::Project,  Stage::Binarize, Stage::Bigrams,
                                          Stage::Cluster, Stage::Features, Stage::Stats,    Stage::Ergm};
    return order;
}

std::vector<StageRecord> run_stage(Stage stage, const PipelineConfig &config) {
    const Workspace ws(config);
    const std::vector<Stage> todo = stage == Stage::All ? stage_order() : std::vector<Stage>{stage};
    std::vector<StageRecord> records;
    for (Stage s : todo) {
        StageRecord rec;
        rec.stage = s;
        const auto start = std::chrono::steady_clock::now();
        switch (s) {
        case Stage::Sample:
            run_sample(ws, rec);
            break;
        case Stage::Project:
            run_project(ws, rec);
            break;
        case Stage::Binarize:
            run_binarize(ws, rec);
            break;
        case Stage::Bigrams:
            run_bigrams(ws, rec);
            break;
        case Stage::Cluster:
            run_cluster(ws, rec);
            break;
        case Stage::Features:
            run_features(ws, rec);
            break;
        case Stage::Stats:
            run_stats(ws, rec);
            break;
        case Stage::Ergm:
            run_ergm(ws, rec);
            break;
        case Stage::All:
            break;
        }
        rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        records.push_back(rec);
        update_report(ws, config, {rec});
    }
    return records;
}

} // namespace itemnet::tools

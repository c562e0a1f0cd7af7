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

// Acceptance checks. Each criterion prints one PASS/FAIL line with the
// measured quantity and its tolerance; the exit status is nonzero if any
// criterion fails or exceeds its time limit.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "itemnet/bipartite.hpp"
#include "itemnet/community.hpp"
#include "itemnet/delimited.hpp"
#include "itemnet/ergm.hpp"
#include "itemnet/error.hpp"
#include "itemnet/features.hpp"
#include "itemnet/graphstats.hpp"
#include "itemnet/random.hpp"
#include "itemnet/sampling.hpp"
#include "itemnet/textnet.hpp"
#include "itemnet_tools/config.hpp"
#include "itemnet_tools/pipeline.hpp"
#include "oracles.hpp"

namespace {

using namespace itemnet;
namespace fs = std::filesystem;

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            if (pass)
                detail = what;
            pass = false;
        }
    }
};

struct Criterion {
    int number;
    const char *name;
    double seconds_allowed;
    std::function<Outcome()> check;
};

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

CovariateTable random_covariates(const Graph &g, std::size_t columns, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::poisson_distribution<int> count(1.2);
    CovariateTable t;
    for (std::size_t k = 0; k < columns; ++k)
        t.columns.push_back("c" + std::to_string(k + 1));
    for (const auto &label : g.labels()) {
        t.item_ids.push_back(label);
        std::vector<std::int64_t> row;
        for (std::size_t k = 0; k < columns; ++k)
            row.push_back(count(rng));
        t.counts.push_back(row);
    }
    return t;
}

std::vector<ErgmTerm> full_terms(const CovariateTable &t) {
    std::vector<std::string> specs{"edges", "nodecov(*)"};
    return parse_terms(specs, t);
}

Outcome toy_projections() {
    Outcome o;
    auto interactions = load_interactions(testing::data_path("fixtures/toy_interactions.csv"));
    std::vector<std::string> items{"a1", "a2", "a3", "a4"};
    auto b = build_incidence(interactions, items).graph;
    const auto items_w = project_items(b).dense();
    const auto users_w = project_users(b).dense();
    const std::vector<std::vector<std::uint32_t>> yty{{0, 2, 1, 1}, {2, 0, 2, 1}, {1, 2, 0, 1}, {1, 1, 1, 0}};
    const std::vector<std::vector<std::uint32_t>> yyt{{0, 1, 2}, {1, 0, 2}, {2, 2, 0}};
    o.require(interactions.size() == 8, "expected 8 interactions");
    o.require(items_w == yty, "item projection differs from Y'Y");
    o.require(users_w == yyt, "user projection differs from YY'");
    o.detail = o.pass ? "Y'Y and YY' exact" : o.detail;
    return o;
}

Outcome toy_covariates() {
    Outcome o;
    ClusterLexicon lexicon({{"day", "sun"}, {"adventure", "glory", "fantasy"}});
    auto doc = tokenize("toy", "A young girl embarks on an epic adventure filled with glory until one day she "
                               "achieves her goal");
    auto counts = count_features(doc, lexicon);
    o.require(counts == std::vector<std::int64_t>{1, 2}, "counts differ from (1, 2)");
    o.detail = "counts (" + std::to_string(counts[0]) + ", " + std::to_string(counts[1]) + ")";
    return o;
}

Outcome ergm_oracle() {
    Outcome o;
    double worst_theta = 0.0, worst_se = 0.0;
    for (std::uint64_t trial = 0; trial < 25; ++trial) {
        Graph g = testing::random_graph(12, 0.2 + 0.01 * static_cast<double>(trial), 7000 + trial);
        CovariateTable t = random_covariates(g, 3, 8000 + trial);
        DyadDesign d = build_design(g, t, full_terms(t));
        ErgmFit f = fit(d);
        std::ostringstream exported;
        write_design(exported, d);
        auto table = testing::parse_design_table(exported.str());
        auto oracle = testing::logistic_irls(table.x, table.y);
        o.require(f.converged && oracle.converged, "trial " + std::to_string(trial) + " did not converge");
        for (std::size_t k = 0; k < f.theta.size(); ++k) {
            const auto kk = static_cast<Eigen::Index>(k);
            worst_theta = std::max(worst_theta, std::abs(f.theta[k] - oracle.coefficients(kk)));
            worst_se = std::max(worst_se, std::abs(f.std_error[k] - oracle.std_errors(kk)));
        }
    }
    o.require(worst_theta < 1e-6 && worst_se < 1e-6, "difference above 1e-6");
    o.detail = "max |dtheta| " + fmt(worst_theta) + ", max |dSE| " + fmt(worst_se) + " (tol 1e-6, 25 graphs)";
    return o;
}

Outcome closed_form_ergm() {
    Outcome o;
    double worst_logit = 0.0, worst_moment = 0.0;
    for (std::uint64_t trial = 0; trial < 10; ++trial) {
        Graph g = testing::random_graph(10 + trial, 0.15 + 0.05 * static_cast<double>(trial), 9100 + trial);
        const double dyads = static_cast<double>(g.num_nodes() * (g.num_nodes() - 1) / 2);
        const double density = static_cast<double>(g.num_edges()) / dyads;
        CovariateTable t = random_covariates(g, 2, 9200 + trial);
        std::vector<ErgmTerm> edges{ErgmTerm::edges()};
        ErgmFit only = fit(build_design(g, t, edges));
        worst_logit = std::max(worst_logit, std::abs(only.theta[0] - std::log(density / (1.0 - density))));

        DyadDesign d = build_design(g, t, full_terms(t));
        ErgmFit f = fit(d);
        std::vector<double> expected(d.num_terms(), 0.0), observed(d.num_terms(), 0.0), row(d.num_terms());
        for (node_index i = 0; i < d.num_nodes(); ++i)
            for (node_index j = i + 1; j < d.num_nodes(); ++j) {
                d.change_stats(i, j, row.data());
                const double p = 1.0 / (1.0 + std::exp(-linear_predictor(d, f.theta, i, j)));
                for (std::size_t k = 0; k < row.size(); ++k) {
                    expected[k] += p * row[k];
                    observed[k] += (d.response(i, j) ? 1.0 : 0.0) * row[k];
                }
            }
        for (std::size_t k = 0; k < row.size(); ++k)
            worst_moment = std::max(worst_moment, std::abs(expected[k] - observed[k]));
    }
    o.require(worst_logit < 1e-10, "edges-only estimate differs from logit(density)");
    o.require(worst_moment < 1e-6, "moment condition violated");
    o.detail = "max |theta - logit(density)| " + fmt(worst_logit) + " (tol 1e-10), max moment gap " +
               fmt(worst_moment) + " (tol 1e-6)";
    return o;
}

Outcome modularity_checks() {
    Outcome o;
    double worst_null = 0.0;
    for (std::uint64_t trial = 0; trial < 20; ++trial) {
        Graph g = testing::random_graph(6 + trial, 0.3, 400 + trial, trial % 2 ? 5 : 1);
        if (g.num_edges() == 0)
            continue;
        worst_null = std::max(worst_null, std::abs(modularity(g, Partition::all_in_one(g.num_nodes()))));
    }
    std::vector<std::size_t> halves{0, 0, 0, 1, 1, 1};
    const double bridge = modularity(testing::two_triangle_bridge(), Partition::from_labels(halves));
    Graph cliques = testing::two_cliques(4);
    const double exhaustive = testing::exhaustive_max_modularity(cliques).modularity;
    auto best = best_partition(cliques, all_algorithms());
    const double winner = modularity(cliques, best.partition);
    o.require(worst_null < 1e-12, "all-in-one modularity not zero");
    o.require(std::abs(bridge - 0.357143) <= 1e-6, "two-triangle bridge value");
    o.require(std::abs(winner - exhaustive) < 1e-12, "winner below exhaustive maximum");
    o.detail = "max |Q_all-in-one| " + fmt(worst_null) + ", bridge " + format_fixed(bridge, 6) + ", two-clique " +
               best.report.winner + " " + format_fixed(winner, 6) + " vs exhaustive " + format_fixed(exhaustive, 6);
    return o;
}

Outcome graphstat_oracles() {
    Outcome o;
    double worst_centrality = 0.0;
    std::size_t core_mismatch = 0, clique_mismatch = 0;
    for (std::uint64_t trial = 0; trial < 50; ++trial) {
        Graph g = testing::random_graph(3 + trial % 8, 0.5, 600 + trial);
        core_mismatch += kcore(g).core_number != testing::brute_force_cores(g);
        clique_mismatch += maximum_clique(g).size() != testing::brute_force_clique_number(g);
        auto power = eigenvector_centrality(g);
        auto dense = testing::dense_centrality(g);
        for (node_index v = 0; v < g.num_nodes(); ++v)
            worst_centrality = std::max(worst_centrality, std::abs(power[v] - dense[v]));
    }
    const double star = *summarize(testing::star_graph(4)).assortativity;
    auto p3 = eigenvector_centrality(testing::path_graph(3));
    o.require(core_mismatch == 0, "k-core mismatch");
    o.require(clique_mismatch == 0, "clique number mismatch");
    o.require(worst_centrality < 1e-6, "centrality differs from dense oracle");
    o.require(std::abs(star + 1.0) < 1e-9, "star assortativity");
    o.require(std::abs(p3[0] - 0.7071) < 1e-4 && std::abs(p3[1] - 1.0) < 1e-4 && std::abs(p3[2] - 0.7071) < 1e-4,
              "P3 centrality");
    o.detail = "50 graphs: core/clique mismatches " + std::to_string(core_mismatch) + "/" +
               std::to_string(clique_mismatch) + ", max centrality gap " + fmt(worst_centrality) +
               "; star r " + format_fixed(star, 9) + "; P3 (" + format_fixed(p3[0], 4) + ", " +
               format_fixed(p3[1], 4) + ", " + format_fixed(p3[2], 4) + ")";
    return o;
}

Outcome sampling_formula() {
    Outcome o;
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<std::size_t> population(1, 100000);
    std::uniform_real_distribution<double> variance(0.0, 10.0), confidence(0.5, 0.995), margin(0.05, 2.0);
    std::size_t violations = 0;
    for (int point = 0; point < 1000; ++point) {
        const std::size_t n = population(rng);
        const double s2 = variance(rng), c = confidence(rng), e = margin(rng);
        const std::size_t base = sample_size(n, s2, c, e);
        violations += sample_size(n, s2 * 1.1, c, e) < base;
        violations += sample_size(n, s2, std::min(0.999, c + 0.004), e) < base;
        violations += sample_size(n, s2, c, e * 1.1) > base;
        violations += base > n;
    }
    const double z = z_critical(0.85);
    const double limit = z * z * 4.0 / (0.2 * 0.2);
    const double gap = std::abs(static_cast<double>(sample_size(1'000'000'000, 4.0, 0.85, 0.2)) - limit);
    const double z95 = z_critical(0.95);
    o.require(violations == 0, "monotonicity violated");
    o.require(gap <= 1.0, "large-N limit");
    o.require(std::abs(z95 - 1.959964) <= 1e-5, "z_critical(0.95)");
    o.detail = "1000-point sweep violations " + std::to_string(violations) + ", |n(1e9) - Z^2S^2/E^2| " + fmt(gap) +
               ", z(0.95) " + format_fixed(z95, 6);
    return o;
}

Outcome bigram_contract() {
    Outcome o;
    std::vector<TokenizedDoc> doc{{"d", {"the", "cat", "sat", "the", "cat", "ran"}}};
    StopwordList the{{"the"}, "fixture"};
    std::map<WordPair, std::uint64_t> after{{{"cat", "sat"}, 1}, {{"cat", "ran"}, 1}};
    std::map<WordPair, std::uint64_t> before{{{"cat", "sat"}, 1}, {{"sat", "cat"}, 1}, {{"cat", "ran"}, 1}};
    o.require(extract_bigrams(doc, the, StopwordMode::RemoveAfter).counts == after, "remove-after fixture");
    o.require(extract_bigrams(doc, the, StopwordMode::RemoveBefore).counts == before, "remove-before fixture");

    BigramCounts merged;
    merged.counts = {{{"cat", "sat"}, 1}, {{"sat", "cat"}, 2}};
    auto g = build_bigram_graph(merged, 3);
    o.require(g.graph.num_edges() == 1 && g.graph.edges()[0].weight == 3.0, "direction merge fixture");

    auto docs = tokenize_catalog(load_catalog(testing::data_path("synthetic/catalog.csv")));
    auto stop = load_stopwords("builtin");
    std::size_t steps = 0;
    for (StopwordMode mode : {StopwordMode::RemoveAfter, StopwordMode::RemoveBefore}) {
        auto counts = extract_bigrams(docs, stop, mode);
        std::set<std::pair<std::string, std::string>> previous;
        for (std::uint64_t t = 1; t <= 30; ++t, ++steps) {
            std::set<std::pair<std::string, std::string>> current;
            try {
                auto bg = build_bigram_graph(counts, t);
                for (const Edge &e : bg.graph.edges())
                    current.insert({bg.graph.label(e.u), bg.graph.label(e.v)});
            } catch (const Error &) {
            }
            if (t > 1)
                o.require(std::includes(previous.begin(), previous.end(), current.begin(), current.end()),
                          "edge set grew at threshold " + std::to_string(t));
            previous = std::move(current);
        }
    }
    if (o.pass)
        o.detail = "both orderings match the fixtures; edge sets nested over " + std::to_string(steps) +
                   " thresholds";
    return o;
}

std::map<std::string, std::string> artifacts(const fs::path &dir) {
    std::map<std::string, std::string> out;
    for (const auto &entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().filename() != tools::artifact::run_report)
            out[entry.path().filename().string()] = testing::slurp(entry.path());
    return out;
}

std::vector<std::string> header(const std::string &text) {
    auto rows = parse_delimited(text);
    return rows.empty() ? std::vector<std::string>{} : rows[0].fields;
}

Outcome end_to_end() {
    Outcome o;
    const fs::path root = testing::scratch_dir("acceptance-e2e");
    std::vector<std::map<std::string, std::string>> runs;
    for (const char *name : {"first", "second"}) {
        auto r = tools::validate_config(testing::data_path("synthetic/config.json"),
                                        nlohmann::json{{"output_dir", (root / name).string()}});
        if (!r.config) {
            o.require(false, "config invalid: " + r.errors.front());
            return o;
        }
        tools::run_stage(tools::Stage::All, *r.config);
        runs.push_back(artifacts(root / name));
    }
    std::size_t differing = 0;
    for (const auto &[file, bytes] : runs[0])
        differing += !runs[1].count(file) || runs[1].at(file) != bytes;
    o.require(runs[0].size() == runs[1].size() && differing == 0, "artifacts differ between runs");

    const auto &a = runs[0];
    using Row = std::vector<std::string>;
    o.require(header(a.at(tools::artifact::word_frequencies)) == Row{"word", "frequency"}, "word table shape");
    o.require(header(a.at(tools::artifact::modularity)) == Row{"algorithm", "modularity", "clusters"},
              "modularity table shape");
    o.require(header(a.at(tools::artifact::topology)) == Row{"statistic", "value"}, "topology table shape");
    Row statistics;
    for (const auto &row : parse_delimited(a.at(tools::artifact::topology)))
        statistics.push_back(row.fields[0]);
    o.require(statistics == Row{"statistic", "Mean geodesic distance", "Mean degree", "SD degree", "Clique number",
                                "Density", "Transitivity", "Associativity"},
              "topology rows");
    o.require(header(a.at(tools::artifact::ergm_coefficients)) ==
                  Row{"term", "estimate", "std_error", "z_value", "p_value"},
              "coefficient table shape");
    const auto coefficient_rows = parse_delimited(a.at(tools::artifact::ergm_coefficients)).size() - 1;
    const auto modularity_rows = parse_delimited(a.at(tools::artifact::modularity)).size() - 1;
    o.require(modularity_rows == all_algorithms().size(), "one modularity row per algorithm");
    if (o.pass)
        o.detail = std::to_string(runs[0].size()) + " artifacts byte-identical across two runs; table shapes ok (" +
                   std::to_string(modularity_rows) + " algorithms, " + std::to_string(coefficient_rows) +
                   " ERGM terms)";
    return o;
}

Outcome gof_self_consistency() {
    Outcome o;
    const int trials = 50;
    int recovered = 0;
    for (int trial = 0; trial < trials; ++trial) {
        const auto seed = static_cast<std::uint64_t>(trial);
        Graph observed = testing::random_graph(40, 0.12, 11000 + seed);
        CovariateTable t = random_covariates(observed, 2, 12000 + seed);
        DyadDesign design = build_design(observed, t, full_terms(t));
        ErgmFit truth = fit(design);
        Graph drawn = simulate(design, truth.theta, substream_seed(13000, seed));
        DyadDesign redesign = build_design(drawn, t, full_terms(t));
        ErgmFit refit = fit(redesign);
        bool inside = refit.converged;
        for (std::size_t k = 0; k < truth.theta.size() && inside; ++k)
            inside = std::abs(refit.theta[k] - truth.theta[k]) <= 3.0 * refit.std_error[k];
        recovered += inside;
    }
    o.require(recovered * 10 >= trials * 9, "recovery below 90%");
    o.detail = std::to_string(recovered) + "/" + std::to_string(trials) +
               " refits within 3 SE of the generating coefficients (need >= 90%)";
    return o;
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "toy projections", 1.0, toy_projections},
        {2, "toy covariates", 1.0, toy_covariates},
        {3, "ERGM logistic oracle", 30.0, ergm_oracle},
        {4, "closed-form ERGM", 5.0, closed_form_ergm},
        {5, "modularity correctness", 30.0, modularity_checks},
        {6, "graph-stat oracles", 60.0, graphstat_oracles},
        {7, "sampling formula", 5.0, sampling_formula},
        {8, "bigram contract", 5.0, bigram_contract},
        {9, "end-to-end determinism", 120.0, end_to_end},
        {10, "GOF self-consistency", 120.0, gof_self_consistency},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception &e) {
            outcome.pass = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (seconds > c.seconds_allowed) {
            outcome.pass = false;
            outcome.detail += " [over time limit]";
        }
        failures += !outcome.pass;
        std::printf("%s %2d %s: %s (%.2f s, limit %.0f s)\n", outcome.pass ? "PASS" : "FAIL", c.number, c.name,
                    outcome.detail.c_str(), seconds, c.seconds_allowed);
    }
    return failures == 0 ? 0 : 1;
}

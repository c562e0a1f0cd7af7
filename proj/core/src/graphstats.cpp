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


#include "itemnet/graphstats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/parallel.hpp"

namespace itemnet {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const Graph &graph, const CliqueBudget &budget)
        : n_(graph.num_nodes()), words_((n_ + 63) / 64), bits_(n_ * words_, 0), budget_(budget),
          start_(std::chrono::steady_clock::now()) {
        for (node_index v = 0; v < n_; ++v)
            for (const Neighbor &nb : graph.neighbors(v))
                bits_[v * words_ + nb.node / 64] |= std::uint64_t{1} << (nb.node % 64);
    }

    CliqueResult run(const Graph &graph) {
        std::vector<node_index> order(n_);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](node_index a, node_index b) { return graph.degree(a) > graph.degree(b); });
        seed_greedy(order);
        expand(order);
        CliqueResult result;
        result.members = best_;
        std::sort(result.members.begin(), result.members.end());
        result.exact = !stopped_;
        return result;
    }

private:
    bool adjacent(node_index u, node_index v) const { return (bits_[u * words_ + v / 64] >> (v % 64)) & 1U; }

    // Greedy cliques grown from each vertex give the initial lower bound.
    void seed_greedy(const std::vector<node_index> &order) {
        for (node_index start : order) {
            std::vector<node_index> clique{start};
            for (node_index v : order) {
                if (v == start)
                    continue;
                if (std::all_of(clique.begin(), clique.end(), [&](node_index u) { return adjacent(u, v); }))
                    clique.push_back(v);
            }
            if (clique.size() > best_.size())
                best_ = clique;
        }
    }

    bool out_of_budget() {
        ++visited_;
        if (visited_ > budget_.max_search_nodes)
            return true;
        return visited_ % 1024 == 0 && std::chrono::steady_clock::now() - start_ > budget_.time;
    }

    void expand(const std::vector<node_index> &candidates) {
        if (stopped_ || (stopped_ = out_of_budget()))
            return;
        // Sequential greedy colouring; colour[i] bounds the clique size within order[0..i].
        std::vector<std::vector<node_index>> classes;
        for (node_index v : candidates) {
            std::size_t k = 0;
            while (k < classes.size() &&
                   std::any_of(classes[k].begin(), classes[k].end(), [&](node_index u) { return adjacent(u, v); }))
                ++k;
            if (k == classes.size())
                classes.emplace_back();
            classes[k].push_back(v);
        }
        std::vector<node_index> order;
        std::vector<std::size_t> colour;
        order.reserve(candidates.size());
        for (std::size_t k = 0; k < classes.size(); ++k)
            for (node_index v : classes[k]) {
                order.push_back(v);
                colour.push_back(k + 1);
            }

        std::vector<node_index> next;
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current_.size() + colour[i] <= best_.size())
                return;
            const node_index v = order[i];
            current_.push_back(v);
            next.clear();
            for (std::size_t j = 0; j < i; ++j)
                if (adjacent(v, order[j]))
                    next.push_back(order[j]);
            if (next.empty()) {
                if (current_.size() > best_.size())
                    best_ = current_;
            } else {
                expand(next);
            }
            current_.pop_back();
            if (stopped_)
                return;
        }
    }

    std::size_t n_;
    std::size_t words_;
    std::vector<std::uint64_t> bits_;
    CliqueBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t visited_ = 0;
    bool stopped_ = false;
    std::vector<node_index> current_, best_;
};

} // namespace

CliqueResult maximum_clique(const Graph &graph, const CliqueBudget &budget) {
    if (graph.num_nodes() == 0)
        return {};
    return CliqueSearch(graph, budget).run(graph);
}

TopologySummary summarize(const Graph &graph, const CliqueBudget &budget) {
    const std::size_t n = graph.num_nodes();
    if (n == 0)
        throw Error(Errc::EmptyGraph, "topology summary of a graph without nodes");
    TopologySummary s;
    s.nodes = n;
    s.edges = graph.num_edges();

    // Hop distances from every source; per-source totals are summed in order.
    std::vector<std::uint64_t> reach(n, 0), dist_sum(n, 0);
    parallel_for(n, [&](std::size_t source) {
        std::vector<std::int64_t> dist(n, -1);
        std::vector<node_index> queue{source};
        dist[source] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const node_index v = queue[head];
            for (const Neighbor &nb : graph.neighbors(v)) {
                if (dist[nb.node] < 0) {
                    dist[nb.node] = dist[v] + 1;
                    dist_sum[source] += static_cast<std::uint64_t>(dist[nb.node]);
                    queue.push_back(nb.node);
                }
            }
        }
        reach[source] = queue.size() - 1;
    });
    const std::uint64_t ordered_pairs = std::accumulate(reach.begin(), reach.end(), std::uint64_t{0});
    const std::uint64_t total_distance = std::accumulate(dist_sum.begin(), dist_sum.end(), std::uint64_t{0});
    if (ordered_pairs > 0)
        s.mean_geodesic = static_cast<double>(total_distance) / static_cast<double>(ordered_pairs);
    s.unreachable_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2 - ordered_pairs / 2;

    const double nd = static_cast<double>(n);
    s.mean_degree = 2.0 * static_cast<double>(s.edges) / nd;
    if (n > 1) {
        double ss = 0.0;
        for (node_index v = 0; v < n; ++v) {
            const double d = static_cast<double>(graph.degree(v)) - s.mean_degree;
            ss += d * d;
        }
        s.sd_degree = std::sqrt(ss / (nd - 1.0));
        s.density = 2.0 * static_cast<double>(s.edges) / (nd * (nd - 1.0));
    }

    std::uint64_t triangles = 0, triples = 0;
    for (node_index v = 0; v < n; ++v) {
        const std::uint64_t d = graph.degree(v);
        triples += d * (d - (d > 0 ? 1 : 0)) / 2;
        const auto nv = graph.neighbors(v);
        for (const Neighbor &a : nv) {
            if (a.node <= v)
                continue;
            const auto na = graph.neighbors(a.node);
            // Common neighbours w > a.node of v and a.node (sorted merge).
            auto i = nv.begin();
            auto j = na.begin();
            while (i != nv.end() && j != na.end()) {
                if (i->node < j->node) {
                    ++i;
                } else if (j->node < i->node) {
                    ++j;
                } else {
                    if (i->node > a.node)
                        ++triangles;
                    ++i;
                    ++j;
                }
            }
        }
    }
    s.transitivity = triples > 0 ? 3.0 * static_cast<double>(triangles) / static_cast<double>(triples) : 0.0;

    const auto edges = graph.edges();
    if (!edges.empty()) {
        bool varies = false;
        const std::size_t first = graph.degree(edges.front().u);
        double mean = 0.0;
        for (const Edge &e : edges) {
            mean += static_cast<double>(graph.degree(e.u) + graph.degree(e.v));
            varies = varies || graph.degree(e.u) != first || graph.degree(e.v) != first;
        }
        if (varies) {
            mean /= 2.0 * static_cast<double>(edges.size());
            double cov = 0.0, var = 0.0;
            for (const Edge &e : edges) {
                const double a = static_cast<double>(graph.degree(e.u)) - mean;
                const double b = static_cast<double>(graph.degree(e.v)) - mean;
                cov += 2.0 * a * b;
                var += a * a + b * b;
            }
            s.assortativity = std::clamp(cov / var, -1.0, 1.0);
        }
    }

    const CliqueResult clique = maximum_clique(graph, budget);
    s.clique_number = clique.size();
    s.clique_exact = clique.exact;
    return s;
}

void write_topology_summary(std::ostream &out, const TopologySummary &s) {
    auto row = [&](const char *name, const std::string &value) {
        write_delimited_row(out, std::vector<std::string>{name, value});
    };
    auto fixed = [](const std::optional<double> &v) { return v ? format_fixed(*v, 4) : std::string("NA"); };
    row("statistic", "value");
    row("Mean geodesic distance", fixed(s.mean_geodesic));
    row("Mean degree", fixed(s.mean_degree));
    row("SD degree", fixed(s.sd_degree));
    row("Clique number", std::to_string(s.clique_number));
    row("Density", fixed(s.density));
    row("Transitivity", fixed(s.transitivity));
    row("Associativity", fixed(s.assortativity));
}

std::size_t CoreDecomposition::degeneracy() const {
    return core_number.empty() ? 0 : *std::max_element(core_number.begin(), core_number.end());
}

CoreDecomposition kcore(const Graph &graph) {
    // Batagelj-Zaversnik bucket peeling.
    const std::size_t n = graph.num_nodes();
    std::vector<std::size_t> deg(n), pos(n), vert(n);
    std::size_t max_deg = 0;
    for (node_index v = 0; v < n; ++v) {
        deg[v] = graph.degree(v);
        max_deg = std::max(max_deg, deg[v]);
    }
    std::vector<std::size_t> bin(max_deg + 1, 0);
    for (std::size_t d : deg)
        ++bin[d];
    std::size_t start = 0;
    for (std::size_t d = 0; d <= max_deg; ++d) {
        const std::size_t count = bin[d];
        bin[d] = start;
        start += count;
    }
    for (node_index v = 0; v < n; ++v) {
        pos[v] = bin[deg[v]]++;
        vert[pos[v]] = v;
    }
    for (std::size_t d = max_deg; d > 0; --d)
        bin[d] = bin[d - 1];
    if (!bin.empty())
        bin[0] = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const node_index v = vert[i];
        for (const Neighbor &nb : graph.neighbors(v)) {
            const node_index u = nb.node;
            if (deg[u] > deg[v]) {
                const std::size_t du = deg[u];
                const std::size_t pu = pos[u];
                const std::size_t pw = bin[du];
                const node_index w = vert[pw];
                if (u != w) {
                    pos[u] = pw;
                    vert[pu] = w;
                    pos[w] = pu;
                    vert[pw] = u;
                }
                ++bin[du];
                --deg[u];
            }
        }
    }
    return CoreDecomposition{std::move(deg)};
}

std::vector<node_index> select_core_nodes(const CoreDecomposition &cores, const CoreRule &rule) {
    std::vector<node_index> selected;
    const auto &k = cores.core_number;
    if (std::holds_alternative<BelowMedianCore>(rule)) {
        if (!k.empty()) {
            std::vector<std::size_t> sorted = k;
            std::sort(sorted.begin(), sorted.end());
            const std::size_t m = sorted.size();
            const double median = m % 2 == 1 ? static_cast<double>(sorted[m / 2])
                                             : 0.5 * static_cast<double>(sorted[m / 2 - 1] + sorted[m / 2]);
            for (node_index v = 0; v < m; ++v)
                if (static_cast<double>(k[v]) < median)
                    selected.push_back(v);
        }
    } else {
        const std::size_t threshold = std::get<AtLeastCore>(rule).k;
        for (node_index v = 0; v < k.size(); ++v)
            if (k[v] >= threshold)
                selected.push_back(v);
    }
    if (selected.empty())
        throw Error(Errc::EmptySelection, "no node satisfies the k-core rule");
    return selected;
}

Graph kcore_subgraph(const Graph &graph, const CoreDecomposition &cores, const CoreRule &rule) {
    if (cores.core_number.size() != graph.num_nodes())
        throw Error(Errc::DimensionMismatch, "core decomposition does not match the graph");
    const auto nodes = select_core_nodes(cores, rule);
    return graph.induced_subgraph(nodes);
}

std::vector<double> eigenvector_centrality(const Graph &graph, const CentralityOptions &options) {
    const std::size_t n = graph.num_nodes();
    std::vector<double> score(n, 0.0);
    std::size_t count = 0;
    const auto component = connected_components(graph, &count);
    std::vector<std::vector<node_index>> groups(count);
    for (node_index v = 0; v < n; ++v)
        groups[component[v]].push_back(v);

    std::vector<double> next(n, 0.0);
    for (const auto &group : groups) {
        if (group.size() < 2)
            continue;
        for (node_index v : group)
            score[v] = 1.0;
        bool converged = false;
        for (std::uint64_t it = 0; it < options.max_iterations && !converged; ++it) {
            double top = 0.0;
            for (node_index v : group) {
                double sum = score[v];
                for (const Neighbor &nb : graph.neighbors(v))
                    sum += nb.weight * score[nb.node];
                next[v] = sum;
                top = std::max(top, sum);
            }
            double change = 0.0;
            for (node_index v : group) {
                next[v] /= top;
                change = std::max(change, std::abs(next[v] - score[v]));
                score[v] = next[v];
            }
            converged = change < options.tolerance;
        }
        if (!converged)
            throw Error(Errc::NoConvergence, "eigenvector centrality did not converge in " +
                                                 std::to_string(options.max_iterations) + " iterations");
    }
    return score;
}

std::vector<std::vector<RankedWord>> rank_cluster_words(const Graph &bigram_graph, const Partition &partition,
                                                        const CentralityOptions &options) {
    if (partition.size() != bigram_graph.num_nodes())
        throw Error(Errc::UncoveredNode, "partition does not cover the word graph");
    std::vector<std::vector<RankedWord>> ranking;
    for (const auto &members : partition.members()) {
        const Graph sub = bigram_graph.induced_subgraph(members);
        const auto score = eigenvector_centrality(sub, options);
        std::vector<RankedWord> words;
        for (node_index v = 0; v < sub.num_nodes(); ++v)
            words.push_back({sub.label(v), score[v]});
        // Scores equal to 1e-9 count as ties so symmetric words sort by name.
        auto grid = [](double x) { return std::llround(x * 1e9); };
        std::sort(words.begin(), words.end(), [&](const RankedWord &a, const RankedWord &b) {
            const auto ga = grid(a.centrality);
            const auto gb = grid(b.centrality);
            return ga != gb ? ga > gb : a.word < b.word;
        });
        ranking.push_back(std::move(words));
    }
    return ranking;
}

void write_ranked_words(std::ostream &out, const std::vector<std::vector<RankedWord>> &ranking) {
    write_delimited_row(out, std::vector<std::string>{"cluster", "rank", "word", "centrality"});
    for (std::size_t c = 0; c < ranking.size(); ++c)
        for (std::size_t r = 0; r < ranking[c].size(); ++r)
            write_delimited_row(out, std::vector<std::string>{std::to_string(c + 1), std::to_string(r + 1),
                                                              ranking[c][r].word,
                                                              format_fixed(ranking[c][r].centrality, 6)});
}

} // namespace itemnet

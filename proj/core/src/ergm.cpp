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


#include "itemnet/ergm.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <set>
#include <unordered_map>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "itemnet/normal.hpp"
#include "itemnet/parallel.hpp"
#include "itemnet/random.hpp"

namespace itemnet {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Neumaier compensated summation.
struct CompensatedSum {
    double sum = 0.0;
    double carry = 0.0;

    void add(double x) {
        const double t = sum + x;
        carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + carry; }
};

double logistic(double eta) {
    if (eta >= 0.0)
        return 1.0 / (1.0 + std::exp(-eta));
    const double e = std::exp(eta);
    return e / (1.0 + e);
}

double softplus(double eta) { return eta > 0.0 ? eta + std::log1p(std::exp(-eta)) : std::log1p(std::exp(eta)); }

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

void check_terms(std::span<const ErgmTerm> terms) {
    std::size_t edges = 0;
    std::set<std::string> seen;
    for (const auto &t : terms) {
        edges += t.kind == ErgmTerm::Kind::Edges;
        if (!seen.insert(t.label()).second)
            throw Error(Errc::ConfigError, "term " + t.label() + " listed twice");
    }
    if (edges != 1)
        throw Error(Errc::ConfigError, "the model needs exactly one edges term");
}

// Sums over the dyad table for the selected terms at theta: gradient
// (observed minus expected statistics), information matrix and log-likelihood.
struct Likelihood {
    Eigen::VectorXd gradient;
    Eigen::MatrixXd information;
    double log_likelihood = 0.0;
};

Likelihood evaluate(const DyadDesign &design, const std::vector<std::size_t> &active, const Eigen::VectorXd &theta,
                    bool need_information) {
    const std::size_t n = design.num_nodes();
    const std::size_t p = active.size();
    const std::size_t width = p + p * p + 1;
    // Per-row partial sums, combined afterwards in row order so the result does
    // not depend on the worker count.
    std::vector<double> partial(n * width, 0.0);
    parallel_for(n, [&](std::size_t i) {
        std::vector<double> stats(design.num_terms());
        std::vector<CompensatedSum> acc(width);
        for (node_index j = i + 1; j < n; ++j) {
            design.change_stats(i, j, stats.data());
            double eta = 0.0;
            for (std::size_t a = 0; a < p; ++a)
                eta += theta(static_cast<Eigen::Index>(a)) * stats[active[a]];
            const double y = design.response(i, j) ? 1.0 : 0.0;
            const double prob = logistic(eta);
            const double w = prob * (1.0 - prob);
            for (std::size_t a = 0; a < p; ++a) {
                acc[a].add((y - prob) * stats[active[a]]);
                if (need_information)
                    for (std::size_t b = 0; b <= a; ++b)
                        acc[p + a * p + b].add(w * stats[active[a]] * stats[active[b]]);
            }
            acc[width - 1].add(y * eta - softplus(eta));
        }
        for (std::size_t k = 0; k < width; ++k)
            partial[i * width + k] = acc[k].value();
    });
    std::vector<CompensatedSum> total(width);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < width; ++k)
            total[k].add(partial[i * width + k]);

    Likelihood out;
    out.gradient.resize(static_cast<Eigen::Index>(p));
    out.information.resize(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t a = 0; a < p; ++a) {
        const auto ea = static_cast<Eigen::Index>(a);
        out.gradient(ea) = total[a].value();
        for (std::size_t b = 0; b <= a; ++b) {
            const auto eb = static_cast<Eigen::Index>(b);
            out.information(ea, eb) = out.information(eb, ea) = total[p + a * p + b].value();
        }
    }
    out.log_likelihood = total[width - 1].value();
    return out;
}

// Terms whose change statistics lie (numerically) in the span of earlier terms.
std::vector<bool> find_aliased(const DyadDesign &design) {
    const std::size_t n = design.num_nodes();
    const std::size_t p = design.num_terms();
    std::vector<double> partial(n * p * p, 0.0);
    parallel_for(n, [&](std::size_t i) {
        std::vector<double> stats(p);
        std::vector<CompensatedSum> acc(p * p);
        for (node_index j = i + 1; j < n; ++j) {
            design.change_stats(i, j, stats.data());
            for (std::size_t a = 0; a < p; ++a)
                for (std::size_t b = 0; b < p; ++b)
                    acc[a * p + b].add(stats[a] * stats[b]);
        }
        for (std::size_t k = 0; k < p * p; ++k)
            partial[i * p * p + k] = acc[k].value();
    });
    Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(p), static_cast<Eigen::Index>(p));
    for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = 0; b < p; ++b) {
            CompensatedSum s;
            for (std::size_t i = 0; i < n; ++i)
                s.add(partial[i * p * p + a * p + b]);
            gram(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = s.value();
        }

    std::vector<bool> aliased(p, false);
    std::vector<Eigen::Index> kept;
    for (std::size_t t = 0; t < p; ++t) {
        const auto et = static_cast<Eigen::Index>(t);
        const double diag = gram(et, et);
        if (!(diag > 0.0)) {
            aliased[t] = true;
            continue;
        }
        double residual = diag;
        if (!kept.empty()) {
            const auto k = static_cast<Eigen::Index>(kept.size());
            Eigen::MatrixXd g(k, k);
            Eigen::VectorXd c(k);
            for (Eigen::Index a = 0; a < k; ++a) {
                c(a) = gram(kept[static_cast<std::size_t>(a)], et);
                for (Eigen::Index b = 0; b < k; ++b)
                    g(a, b) = gram(kept[static_cast<std::size_t>(a)], kept[static_cast<std::size_t>(b)]);
            }
            residual = diag - c.dot(g.ldlt().solve(c));
        }
        if (residual <= 1e-9 * diag)
            aliased[t] = true;
        else
            kept.push_back(et);
    }
    return aliased;
}

} // namespace

std::string ErgmTerm::label() const { return kind == Kind::Edges ? "edges" : "nodecov." + column; }

std::vector<ErgmTerm> parse_terms(std::span<const std::string> specs, const CovariateTable &covariates) {
    std::vector<ErgmTerm> terms;
    for (const auto &raw : specs) {
        const std::string_view spec = strip(raw);
        if (spec == "edges") {
            terms.push_back(ErgmTerm::edges());
            continue;
        }
        constexpr std::string_view prefix = "nodecov(";
        if (spec.starts_with(prefix) && spec.ends_with(")")) {
            const std::string_view column = strip(spec.substr(prefix.size(), spec.size() - prefix.size() - 1));
            if (column == "*") {
                for (const auto &c : covariates.columns)
                    terms.push_back(ErgmTerm::nodecov(c));
                continue;
            }
            if (!column.empty()) {
                terms.push_back(ErgmTerm::nodecov(std::string(column)));
                continue;
            }
        }
        throw Error(Errc::ConfigError, "unknown model term '" + raw + "'");
    }
    check_terms(terms);
    return terms;
}

std::vector<std::string> DyadDesign::term_labels() const {
    std::vector<std::string> labels;
    for (const auto &t : terms_)
        labels.push_back(t.label());
    return labels;
}

void DyadDesign::change_stats(node_index i, node_index j, double *out) const {
    for (std::size_t t = 0; t < terms_.size(); ++t) {
        if (terms_[t].kind == ErgmTerm::Kind::Edges) {
            out[t] = 1.0;
        } else {
            const std::size_t c = column_of_term_[t];
            out[t] = node_values_[i * value_width_ + c] + node_values_[j * value_width_ + c];
        }
    }
}

std::size_t DyadDesign::row_index(node_index i, node_index j) const {
    const std::size_t n = num_nodes();
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

DyadDesign build_design(const Graph &graph, const CovariateTable &covariates, std::span<const ErgmTerm> terms,
                        const DesignOptions &options) {
    check_terms(terms);
    DyadDesign design;
    design.node_ids_ = graph.labels();
    design.terms_.assign(terms.begin(), terms.end());

    std::unordered_map<std::string, std::size_t> column_index;
    for (std::size_t c = 0; c < covariates.columns.size(); ++c)
        column_index.emplace(covariates.columns[c], c);
    std::vector<std::size_t> source_column;
    design.column_of_term_.assign(terms.size(), 0);
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (terms[t].kind != ErgmTerm::Kind::NodeCov)
            continue;
        const auto it = column_index.find(terms[t].column);
        if (it == column_index.end())
            throw Error(Errc::MissingCovariate, "no covariate column '" + terms[t].column + "'");
        design.column_of_term_[t] = source_column.size();
        source_column.push_back(it->second);
    }

    std::unordered_map<std::string, std::size_t> row_of;
    for (std::size_t r = 0; r < covariates.num_items(); ++r)
        row_of.emplace(covariates.item_ids[r], r);
    const std::size_t n = graph.num_nodes();
    const std::size_t w = source_column.size();
    design.value_width_ = w;
    design.node_values_.assign(n * w, 0.0);
    for (node_index v = 0; v < n; ++v) {
        const auto it = row_of.find(graph.label(v));
        if (it == row_of.end())
            throw Error(Errc::MissingCovariate, "node " + graph.label(v) + " has no covariate row");
        for (std::size_t c = 0; c < w; ++c)
            design.node_values_[v * w + c] = static_cast<double>(covariates.counts[it->second][source_column[c]]);
    }
    if (options.standardize && n > 1) {
        for (std::size_t c = 0; c < w; ++c) {
            double mean = 0.0;
            for (node_index v = 0; v < n; ++v)
                mean += design.node_values_[v * w + c];
            mean /= static_cast<double>(n);
            double ss = 0.0;
            for (node_index v = 0; v < n; ++v)
                ss += (design.node_values_[v * w + c] - mean) * (design.node_values_[v * w + c] - mean);
            const double sd = std::sqrt(ss / static_cast<double>(n - 1));
            for (node_index v = 0; v < n; ++v) {
                double &x = design.node_values_[v * w + c];
                x = sd > 0.0 ? (x - mean) / sd : 0.0;
            }
        }
    }

    design.tie_.assign(n * n, 0);
    for (const Edge &e : graph.edges()) {
        design.tie_[e.u * n + e.v] = 1;
        design.tie_[e.v * n + e.u] = 1;
    }
    return design;
}

void write_design(std::ostream &out, const DyadDesign &design) {
    std::vector<std::string> row{"node_a", "node_b", "y"};
    const auto labels = design.term_labels();
    row.insert(row.end(), labels.begin(), labels.end());
    write_delimited_row(out, row);
    std::vector<double> stats(design.num_terms());
    const auto &ids = design.node_ids();
    for (node_index i = 0; i < design.num_nodes(); ++i) {
        for (node_index j = i + 1; j < design.num_nodes(); ++j) {
            design.change_stats(i, j, stats.data());
            row = {ids[i], ids[j], design.response(i, j) ? "1" : "0"};
            for (double s : stats)
                row.push_back(format_real(s));
            write_delimited_row(out, row);
        }
    }
}

ErgmFit fit(const DyadDesign &design, const FitOptions &options) {
    if (design.num_nodes() < 2)
        throw Error(Errc::EmptyGraph, "the model needs at least two nodes");
    const std::size_t p_all = design.num_terms();
    ErgmFit result;
    result.terms = design.term_labels();

    const auto aliased = find_aliased(design);
    std::vector<std::size_t> active;
    for (std::size_t t = 0; t < p_all; ++t) {
        if (aliased[t])
            result.aliased.push_back(result.terms[t]);
        else
            active.push_back(t);
    }
    if (!result.aliased.empty()) {
        std::string names;
        for (const auto &a : result.aliased)
            names += (names.empty() ? "" : ", ") + a;
        result.warnings.push_back("SingularInformation: aliased terms dropped from the fit: " + names);
    }

    const auto p = static_cast<Eigen::Index>(active.size());
    Eigen::VectorXd theta = Eigen::VectorXd::Zero(p);
    // Start the edges coefficient at logit(density) when that is finite.
    std::size_t ties = 0;
    for (node_index i = 0; i < design.num_nodes(); ++i)
        for (node_index j = i + 1; j < design.num_nodes(); ++j)
            ties += design.response(i, j);
    const double density = static_cast<double>(ties) / static_cast<double>(design.num_rows());
    if (ties == 0 || ties == design.num_rows()) {
        // The edges term alone predicts a constant response perfectly.
        result.separation = true;
        result.warnings.push_back(ties == 0 ? "Separation: the graph has no ties; estimates diverge"
                                            : "Separation: every dyad is a tie; estimates diverge");
    }
    for (Eigen::Index a = 0; a < p; ++a)
        if (design.terms()[active[static_cast<std::size_t>(a)]].kind == ErgmTerm::Kind::Edges && density > 0.0 &&
            density < 1.0)
            theta(a) = std::log(density / (1.0 - density));

    Likelihood current = evaluate(design, active, theta, true);
    for (result.iterations = 0; result.iterations < options.max_iterations;) {
        if (p == 0 || current.gradient.cwiseAbs().maxCoeff() < options.gradient_tolerance) {
            result.converged = true;
            break;
        }
        Eigen::LDLT<Eigen::MatrixXd> solver(current.information);
        if (solver.info() != Eigen::Success || !solver.isPositive())
            break;
        const Eigen::VectorXd step = solver.solve(current.gradient);
        ++result.iterations;
        // Newton steps on a concave log-likelihood rarely overshoot; halve if they do.
        double scale = 1.0;
        Likelihood trial = evaluate(design, active, theta + step, true);
        for (int k = 0; k < 30 && trial.log_likelihood < current.log_likelihood - 1e-12 * std::abs(current.log_likelihood);
             ++k) {
            scale *= 0.5;
            trial = evaluate(design, active, theta + scale * step, true);
        }
        theta += scale * step;
        current = std::move(trial);
        if (theta.cwiseAbs().maxCoeff() > options.separation_bound) {
            if (!result.separation)
                result.warnings.push_back("Separation: |theta| exceeded " + format_real(options.separation_bound) +
                                          "; estimates diverge");
            result.separation = true;
            break;
        }
        if ((scale * step).cwiseAbs().maxCoeff() <= 1e-13 * (1.0 + theta.cwiseAbs().maxCoeff())) {
            // No representable progress left.
            result.converged = current.gradient.cwiseAbs().maxCoeff() < 1e-6;
            break;
        }
    }
    if (!result.converged && !result.separation)
        result.warnings.push_back("NoConvergence: gradient above tolerance after " +
                                  std::to_string(result.iterations) + " iterations");

    result.theta.assign(p_all, kNaN);
    result.std_error.assign(p_all, kNaN);
    result.z_value.assign(p_all, kNaN);
    result.p_value.assign(p_all, kNaN);
    result.log_likelihood = current.log_likelihood;

    Eigen::VectorXd variance = Eigen::VectorXd::Constant(p, kNaN);
    if (p > 0) {
        Eigen::LDLT<Eigen::MatrixXd> solver(current.information);
        if (solver.info() == Eigen::Success && solver.isPositive()) {
            const Eigen::MatrixXd inverse = solver.solve(Eigen::MatrixXd::Identity(p, p));
            variance = inverse.diagonal();
        } else {
            result.warnings.push_back("SingularInformation: information matrix not positive definite");
        }
    }
    for (Eigen::Index a = 0; a < p; ++a) {
        const std::size_t t = active[static_cast<std::size_t>(a)];
        result.theta[t] = theta(a);
        if (variance(a) > 0.0) {
            result.std_error[t] = std::sqrt(variance(a));
            result.z_value[t] = theta(a) / result.std_error[t];
            result.p_value[t] = two_sided_p_value(result.z_value[t]);
        }
    }
    return result;
}

double linear_predictor(const DyadDesign &design, std::span<const double> theta, node_index i, node_index j) {
    if (theta.size() != design.num_terms())
        throw Error(Errc::DimensionMismatch, "coefficient count does not match the terms");
    std::vector<double> stats(design.num_terms());
    design.change_stats(i, j, stats.data());
    double eta = 0.0;
    for (std::size_t t = 0; t < stats.size(); ++t)
        if (!std::isnan(theta[t]))
            eta += theta[t] * stats[t];
    return eta;
}

Graph simulate(const DyadDesign &design, std::span<const double> theta, std::uint64_t seed) {
    if (theta.size() != design.num_terms())
        throw Error(Errc::DimensionMismatch, "coefficient count does not match the terms");
    const std::size_t n = design.num_nodes();
    std::vector<std::vector<Edge>> rows(n);
    parallel_for(n, [&](std::size_t i) {
        std::vector<double> stats(design.num_terms());
        for (node_index j = i + 1; j < n; ++j) {
            design.change_stats(i, j, stats.data());
            double eta = 0.0;
            for (std::size_t t = 0; t < stats.size(); ++t)
                if (!std::isnan(theta[t]))
                    eta += theta[t] * stats[t];
            const double u = uniform_unit(substream_seed(seed, design.row_index(i, j)));
            if (u < logistic(eta))
                rows[i].push_back({i, j, 1.0});
        }
    });
    std::vector<Edge> edges;
    for (auto &r : rows)
        edges.insert(edges.end(), r.begin(), r.end());
    return Graph(design.node_ids(), edges);
}

void write_coefficients(std::ostream &out, const ErgmFit &fit) {
    write_delimited_row(out, std::vector<std::string>{"term", "estimate", "std_error", "z_value", "p_value"});
    for (std::size_t t = 0; t < fit.terms.size(); ++t)
        write_delimited_row(out, std::vector<std::string>{fit.terms[t], format_real(fit.theta[t]),
                                                          format_real(fit.std_error[t]), format_real(fit.z_value[t]),
                                                          format_real(fit.p_value[t])});
}

double quantile(std::vector<double> values, double prob) {
    if (values.empty())
        throw Error(Errc::EmptySeries, "quantile of no values");
    std::sort(values.begin(), values.end());
    const double h = (static_cast<double>(values.size()) - 1.0) * prob;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= values.size())
        return values.back();
    return values[lo] + (h - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
}

namespace {

struct GraphTallies {
    double edges = 0.0;
    std::vector<double> degree;   ///< nodes per degree
    double triangles = 0.0;
    std::vector<double> geodesic; ///< pairs per distance; slot 0 holds unreachable pairs
};

GraphTallies tally(const Graph &g) {
    const std::size_t n = g.num_nodes();
    GraphTallies t;
    t.edges = static_cast<double>(g.num_edges());
    for (node_index v = 0; v < n; ++v) {
        const std::size_t d = g.degree(v);
        if (t.degree.size() <= d)
            t.degree.resize(d + 1, 0.0);
        t.degree[d] += 1.0;
        for (const Neighbor &a : g.neighbors(v))
            if (a.node > v)
                for (const Neighbor &b : g.neighbors(a.node))
                    if (b.node > a.node && g.has_edge(v, b.node))
                        t.triangles += 1.0;
    }
    t.geodesic.assign(1, 0.0);
    std::vector<long> dist(n);
    std::vector<node_index> queue;
    for (node_index s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.assign(1, s);
        dist[s] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head)
            for (const Neighbor &nb : g.neighbors(queue[head]))
                if (dist[nb.node] < 0) {
                    dist[nb.node] = dist[queue[head]] + 1;
                    queue.push_back(nb.node);
                }
        for (node_index v = s + 1; v < n; ++v) {
            const std::size_t slot = dist[v] < 0 ? 0 : static_cast<std::size_t>(dist[v]);
            if (t.geodesic.size() <= slot)
                t.geodesic.resize(slot + 1, 0.0);
            t.geodesic[slot] += 1.0;
        }
    }
    return t;
}

GofEntry summarize_entry(std::string label, double observed, const std::vector<double> &simulated) {
    return {std::move(label), observed, quantile(simulated, 0.025), quantile(simulated, 0.5),
            quantile(simulated, 0.975)};
}

} // namespace

GofReport gof(const ErgmFit &fit, const Graph &observed, const DyadDesign &design, std::size_t nsim,
              std::uint64_t seed) {
    if (nsim == 0)
        throw Error(Errc::OutOfRange, "goodness of fit needs at least one simulation");
    if (observed.num_nodes() != design.num_nodes())
        throw Error(Errc::DimensionMismatch, "observed graph does not match the design");
    const GraphTallies obs = tally(observed);
    std::vector<GraphTallies> sims(nsim);
    for (std::size_t s = 0; s < nsim; ++s)
        sims[s] = tally(simulate(design, fit.theta, substream_seed(seed, s)));

    auto column = [&](auto get) {
        std::vector<double> v;
        v.reserve(nsim);
        for (const auto &s : sims)
            v.push_back(get(s));
        return v;
    };
    auto slot = [](const std::vector<double> &v, std::size_t k) { return k < v.size() ? v[k] : 0.0; };

    GofReport report;
    report.simulations = nsim;
    report.statistics.push_back(
        {"edges", {summarize_entry("edges", obs.edges, column([](const GraphTallies &s) { return s.edges; }))}});

    std::size_t max_degree = obs.degree.size();
    std::size_t max_distance = obs.geodesic.size();
    for (const auto &s : sims) {
        max_degree = std::max(max_degree, s.degree.size());
        max_distance = std::max(max_distance, s.geodesic.size());
    }
    GofStatistic degree{"degree", {}};
    for (std::size_t k = 0; k < max_degree; ++k)
        degree.entries.push_back(summarize_entry(std::to_string(k), slot(obs.degree, k),
                                                 column([&](const GraphTallies &s) { return slot(s.degree, k); })));
    report.statistics.push_back(std::move(degree));

    report.statistics.push_back({"triangles",
                                 {summarize_entry("triangles", obs.triangles,
                                                  column([](const GraphTallies &s) { return s.triangles; }))}});

    GofStatistic geodesic{"geodesic", {}};
    for (std::size_t d = 1; d < max_distance; ++d)
        geodesic.entries.push_back(summarize_entry(std::to_string(d), slot(obs.geodesic, d),
                                                   column([&](const GraphTallies &s) { return slot(s.geodesic, d); })));
    geodesic.entries.push_back(
        summarize_entry("inf", obs.geodesic[0], column([](const GraphTallies &s) { return s.geodesic[0]; })));
    report.statistics.push_back(std::move(geodesic));
    return report;
}

void write_gof(std::ostream &out, const GofReport &report) {
    write_delimited_row(out, std::vector<std::string>{"statistic", "label", "observed", "q025", "q50", "q975"});
    for (const auto &stat : report.statistics)
        for (const auto &e : stat.entries)
            write_delimited_row(out, std::vector<std::string>{stat.name, e.label, format_real(e.observed),
                                                              format_real(e.q025), format_real(e.q50),
                                                              format_real(e.q975)});
}

} // namespace itemnet

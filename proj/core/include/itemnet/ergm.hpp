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


#ifndef ITEMNET_ERGM_HPP_
#define ITEMNET_ERGM_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "itemnet/features.hpp"
#include "itemnet/graph.hpp"

namespace itemnet {

struct ErgmTerm {
    enum class Kind { Edges, NodeCov };

    Kind kind = Kind::Edges;
    std::string column; ///< covariate column for NodeCov

    static ErgmTerm edges() { return {}; }
    static ErgmTerm nodecov(std::string column) { return {Kind::NodeCov, std::move(column)}; }

    /// "edges" or "nodecov.<column>".
    std::string label() const;

    bool operator==(const ErgmTerm &) const = default;
};

/**
 * Parses "edges", "nodecov(<column>)" and "nodecov(*)", the last expanding to
 * every covariate column in table order. Throws Error(ConfigError) for other
 * forms, for a term list without exactly one edges term, and for repeated terms.
 */
std::vector<ErgmTerm> parse_terms(std::span<const std::string> specs, const CovariateTable &covariates);

struct DesignOptions {
    bool standardize = false; ///< centre and scale each covariate to unit SD over the nodes
};

/**
 * One row per unordered node pair i < j, in lexicographic order: response y_ij
 * and change statistics 1 (edges) or x_i + x_j (nodecov). Rows are generated
 * on demand from node covariates, so memory stays O(n^2 / 8 + nK).
 */
class DyadDesign {
public:
    DyadDesign() = default;

    std::size_t num_nodes() const noexcept { return node_ids_.size(); }
    std::size_t num_rows() const noexcept { return num_nodes() * (num_nodes() - (num_nodes() > 0)) / 2; }
    std::size_t num_terms() const noexcept { return terms_.size(); }

    const std::vector<std::string> &node_ids() const noexcept { return node_ids_; }
    const std::vector<ErgmTerm> &terms() const noexcept { return terms_; }
    std::vector<std::string> term_labels() const;

    bool response(node_index i, node_index j) const { return tie_[i * num_nodes() + j] != 0; }

    /// Writes num_terms() change statistics for the pair (i, j).
    void change_stats(node_index i, node_index j, double *out) const;

    /// Index of pair (i, j), i < j, in row order.
    std::size_t row_index(node_index i, node_index j) const;

private:
    friend DyadDesign build_design(const Graph &, const CovariateTable &, std::span<const ErgmTerm>,
                                   const DesignOptions &);

    std::vector<std::string> node_ids_;
    std::vector<ErgmTerm> terms_;
    std::vector<std::size_t> column_of_term_; ///< index into node_values_ rows; unused for edges
    std::size_t value_width_ = 0;
    std::vector<double> node_values_; ///< num_nodes x value_width_
    std::vector<std::uint8_t> tie_;   ///< num_nodes x num_nodes adjacency
};

/// Throws Error(MissingCovariate) when a node has no covariate row or a term
/// names a missing column, Error(ConfigError) for an invalid term list.
DyadDesign build_design(const Graph &graph, const CovariateTable &covariates, std::span<const ErgmTerm> terms,
                        const DesignOptions &options = {});

/// Columns node_a, node_b, y, then one column per term label.
void write_design(std::ostream &out, const DyadDesign &design);

struct FitOptions {
    double gradient_tolerance = 1e-8;
    std::size_t max_iterations = 100;
    double separation_bound = 30.0;
};

struct ErgmFit {
    std::vector<std::string> terms;
    std::vector<double> theta; ///< NaN for aliased terms
    std::vector<double> std_error;
    std::vector<double> z_value;
    std::vector<double> p_value; ///< two-sided, standard normal reference
    double log_likelihood = 0.0;
    bool converged = false;
    std::size_t iterations = 0;
    bool separation = false;          ///< some |theta| exceeded the separation bound
    std::vector<std::string> aliased; ///< terms dropped for a singular information matrix
    std::vector<std::string> warnings;
};

/**
 * Exact maximum likelihood for dyad-independent terms: Newton-Raphson on the
 * logistic log-likelihood of the dyad table. Terms whose change statistics
 * are linearly dependent on earlier ones are reported as aliased (NaN
 * estimates) and the rest are fitted. Separation is reported in the result,
 * not thrown. Throws Error(EmptyGraph) for fewer than two nodes.
 */
ErgmFit fit(const DyadDesign &design, const FitOptions &options = {});

/// Linear predictor theta' delta_ij with aliased (NaN) entries taken as 0.
double linear_predictor(const DyadDesign &design, std::span<const double> theta, node_index i, node_index j);

/// Each dyad is present independently with probability logistic(theta' delta).
/// Dyad r draws from its own substream of `seed`.
Graph simulate(const DyadDesign &design, std::span<const double> theta, std::uint64_t seed);

/// Columns term, estimate, std_error, z_value, p_value.
void write_coefficients(std::ostream &out, const ErgmFit &fit);

struct GofEntry {
    std::string label;
    double observed = 0.0;
    double q025 = 0.0;
    double q50 = 0.0;
    double q975 = 0.0;
};

struct GofStatistic {
    std::string name; ///< edges, degree, triangles, geodesic
    std::vector<GofEntry> entries;
};

struct GofReport {
    std::size_t simulations = 0;
    std::vector<GofStatistic> statistics;
};

/// Linear-interpolation quantile (type 7). `values` must be nonempty.
double quantile(std::vector<double> values, double prob);

/**
 * Compares `observed` with `nsim` graphs simulated at the fitted coefficients
 * on edge count, degree distribution, triangle count and geodesic-distance
 * distribution. Simulation s uses the substream s of `seed`.
 */
GofReport gof(const ErgmFit &fit, const Graph &observed, const DyadDesign &design, std::size_t nsim,
              std::uint64_t seed);

/// Columns statistic, label, observed, q025, q50, q975.
void write_gof(std::ostream &out, const GofReport &report);

} // namespace itemnet

#endif // ITEMNET_ERGM_HPP_

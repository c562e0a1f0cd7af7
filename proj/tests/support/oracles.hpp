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

// Independent reference implementations used by the tests. They favour the
// most direct formulation (dense matrices, exhaustive search) over speed and
// share no code with the library beyond the Graph container.

#ifndef ITEMNET_TESTS_ORACLES_HPP_
#define ITEMNET_TESTS_ORACLES_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "itemnet/graph.hpp"

namespace itemnet::testing {

/// Path below the repository's data/ directory.
std::filesystem::path data_path(std::string_view relative);

/// Fresh empty directory under the system temp dir.
std::filesystem::path scratch_dir(std::string_view name);

std::string slurp(const std::filesystem::path &path);

/// G(n, p) with labels v0, v1, ...; optional integer weights in [1, max_weight].
Graph random_graph(std::size_t n, double p, std::uint64_t seed, int max_weight = 1);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_graph(std::size_t n);
/// Two triangles {0,1,2} and {3,4,5} joined by the edge 2-3.
Graph two_triangle_bridge();
/// Two k-cliques joined by a single edge between node k-1 and node k.
Graph two_cliques(std::size_t k);

/// Intersection counts between the columns (or rows) of a dense 0/1 matrix,
/// zero on the diagonal.
std::vector<std::vector<std::uint32_t>> pairwise_overlaps(const std::vector<std::vector<int>> &y, bool columns);

/// (1/2m) sum_ij (A_ij - k_i k_j / 2m) [c_i == c_j], summed literally.
double direct_modularity(const Graph &graph, const std::vector<std::size_t> &labels, bool include_diagonal = true);

struct ExhaustiveResult {
    double modularity = 0.0;
    std::vector<std::size_t> labels;
    std::size_t partitions_checked = 0;
};
/// Maximum standard modularity over every set partition (restricted growth strings).
ExhaustiveResult exhaustive_max_modularity(const Graph &graph);

/// Core numbers by testing every k with iterated deletion.
std::vector<std::size_t> brute_force_cores(const Graph &graph);

/// Largest clique by checking every node subset (n <= 20).
std::size_t brute_force_clique_number(const Graph &graph);

/// Dominant eigenvector of each component's dense adjacency, |.|, max = 1.
std::vector<double> dense_centrality(const Graph &graph);

struct LogisticResult {
    Eigen::VectorXd coefficients;
    Eigen::VectorXd std_errors;
    std::size_t iterations = 0;
    bool converged = false;
};
/// Logistic regression by iteratively reweighted least squares with a
/// Householder QR solve at every step.
LogisticResult logistic_irls(const Eigen::MatrixXd &x, const Eigen::VectorXd &y);

struct DesignTable {
    std::vector<std::string> columns; ///< change-statistic column names
    Eigen::MatrixXd x;
    Eigen::VectorXd y;
};
/// Reads the exported dyad table (node_a, node_b, y, terms...).
DesignTable parse_design_table(const std::string &text);

/// Standard normal CDF from boost::math.
double reference_normal_cdf(double z);
double reference_normal_quantile(double p);

} // namespace itemnet::testing

#endif // ITEMNET_TESTS_ORACLES_HPP_

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

// Newman's leading-eigenvector method: repeatedly bisect a community by the
// signs of the leading eigenvector of its generalised modularity matrix
//   B(g)_ij = A_ij - k_i k_j / 2m - delta_ij sum_{l in g} (A_il - k_i k_l / 2m),
// and stop splitting a community once the leading eigenvalue or the
// modularity gain is no longer positive.

#include <Eigen/Dense>
#include <deque>

#include "algorithms.hpp"

namespace itemnet::community {

std::vector<std::size_t> leading_eigenvector(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    const double two_m = 2.0 * graph.total_weight();
    std::vector<std::size_t> label(n, 0);
    if (two_m == 0.0) {
        for (std::size_t v = 0; v < n; ++v)
            label[v] = v;
        return label;
    }

    std::vector<node_index> everyone(n);
    for (std::size_t v = 0; v < n; ++v)
        everyone[v] = v;
    std::deque<std::vector<node_index>> pending{everyone};
    std::size_t next_label = 0;

    while (!pending.empty()) {
        std::vector<node_index> group = std::move(pending.front());
        pending.pop_front();
        const std::size_t g = group.size();
        const std::size_t this_label = next_label++;
        for (node_index v : group)
            label[v] = this_label;
        if (g < 2)
            continue;

        Eigen::MatrixXd b(g, g);
        Eigen::VectorXd k(g);
        for (std::size_t i = 0; i < g; ++i)
            k(i) = graph.strength(group[i]);
        for (std::size_t i = 0; i < g; ++i)
            for (std::size_t j = 0; j < g; ++j)
                b(i, j) = (i == j ? 0.0 : graph.weight(group[i], group[j])) - k(i) * k(j) / two_m;
        for (std::size_t i = 0; i < g; ++i)
            b(i, i) -= b.row(i).sum();

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b);
        const double lambda = solver.eigenvalues()(g - 1);
        const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
        if (!(lambda > 1e-10 * scale))
            continue;
        Eigen::VectorXd u = solver.eigenvectors().col(g - 1);
        // Fix the eigenvector sign so the split does not depend on the solver.
        Eigen::Index pivot = 0;
        u.cwiseAbs().maxCoeff(&pivot);
        if (u(pivot) < 0)
            u = -u;

        Eigen::VectorXd s(g);
        std::vector<node_index> left, right;
        for (std::size_t i = 0; i < g; ++i) {
            s(i) = u(i) >= 0.0 ? 1.0 : -1.0;
            (s(i) > 0 ? left : right).push_back(group[i]);
        }
        const double gain = s.dot(b * s) / (2.0 * two_m);
        if (left.empty() || right.empty() || !(gain > 1e-10))
            continue;
        pending.push_back(std::move(left));
        pending.push_back(std::move(right));
    }
    return label;
}

} // namespace itemnet::community

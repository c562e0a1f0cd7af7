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

#include "oracles.hpp"

#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "itemnet/delimited.hpp"

namespace itemnet::testing {

std::filesystem::path data_path(std::string_view relative) {
    return std::filesystem::path(ITEMNET_DATA_DIR) / relative;
}

std::filesystem::path scratch_dir(std::string_view name) {
    auto dir = std::filesystem::temp_directory_path() / ("itemnet-test-" + std::string(name));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

std::string slurp(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

namespace {

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back("v" + std::to_string(i));
    return out;
}

} // namespace

Graph random_graph(std::size_t n, double p, std::uint64_t seed, int max_weight) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> weight(1, max_weight);
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng) < p)
                edges.push_back({u, v, static_cast<double>(weight(rng))});
    return Graph(labels(n), edges);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, 1.0});
    return Graph(labels(n), edges);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.push_back({i, i + 1, 1.0});
    edges.push_back({0, n - 1, 1.0});
    return Graph(labels(n), edges);
}

Graph star_graph(std::size_t leaves) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i <= leaves; ++i)
        edges.push_back({0, i, 1.0});
    return Graph(labels(leaves + 1), edges);
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            edges.push_back({u, v, 1.0});
    return Graph(labels(n), edges);
}

Graph two_triangle_bridge() {
    std::vector<Edge> edges{{0, 1, 1.0}, {0, 2, 1.0}, {1, 2, 1.0}, {2, 3, 1.0},
                            {3, 4, 1.0}, {3, 5, 1.0}, {4, 5, 1.0}};
    return Graph(labels(6), edges);
}

Graph two_cliques(std::size_t k) {
    std::vector<Edge> edges;
    for (std::size_t block = 0; block < 2; ++block)
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = u + 1; v < k; ++v)
                edges.push_back({block * k + u, block * k + v, 1.0});
    edges.push_back({k - 1, k, 1.0});
    return Graph(labels(2 * k), edges);
}

std::vector<std::vector<std::uint32_t>> pairwise_overlaps(const std::vector<std::vector<int>> &y, bool columns) {
    const std::size_t rows = y.size();
    const std::size_t cols = rows ? y[0].size() : 0;
    const std::size_t n = columns ? cols : rows;
    std::vector<std::vector<std::uint32_t>> out(n, std::vector<std::uint32_t>(n, 0));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b)
                continue;
            std::uint32_t shared = 0;
            if (columns) {
                for (std::size_t r = 0; r < rows; ++r)
                    shared += y[r][a] && y[r][b];
            } else {
                for (std::size_t c = 0; c < cols; ++c)
                    shared += y[a][c] && y[b][c];
            }
            out[a][b] = shared;
        }
    }
    return out;
}

double direct_modularity(const Graph &graph, const std::vector<std::size_t> &labels, bool include_diagonal) {
    const std::size_t n = graph.num_nodes();
    const double two_m = 2.0 * graph.total_weight();
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (labels[i] != labels[j] || (i == j && !include_diagonal))
                continue;
            const double a = i == j ? 0.0 : graph.weight(i, j);
            q += a - graph.strength(i) * graph.strength(j) / two_m;
        }
    }
    return q / two_m;
}

ExhaustiveResult exhaustive_max_modularity(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    ExhaustiveResult best;
    best.modularity = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> rgs(n, 0);
    // Restricted growth strings: rgs[i] <= 1 + max(rgs[0..i-1]).
    std::function<void(std::size_t, std::size_t)> visit = [&](std::size_t i, std::size_t used) {
        if (i == n) {
            ++best.partitions_checked;
            const double q = direct_modularity(graph, rgs);
            if (q > best.modularity) {
                best.modularity = q;
                best.labels = rgs;
            }
            return;
        }
        for (std::size_t c = 0; c <= used && c < n; ++c) {
            rgs[i] = c;
            visit(i + 1, std::max(used, c + 1));
        }
    };
    if (n > 0) {
        rgs[0] = 0;
        visit(1, 1);
    }
    return best;
}

std::vector<std::size_t> brute_force_cores(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    std::vector<std::size_t> core(n, 0);
    for (std::size_t k = 1; k < n; ++k) {
        std::vector<bool> alive(n, true);
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (!alive[v])
                    continue;
                std::size_t d = 0;
                for (const Neighbor &nb : graph.neighbors(v))
                    d += alive[nb.node];
                if (d < k) {
                    alive[v] = false;
                    changed = true;
                }
            }
        }
        for (std::size_t v = 0; v < n; ++v)
            if (alive[v])
                core[v] = k;
    }
    return core;
}

std::size_t brute_force_clique_number(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    if (n > 20)
        throw std::invalid_argument("brute_force_clique_number: too many nodes");
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const auto size = static_cast<std::size_t>(__builtin_popcount(mask));
        if (size <= best)
            continue;
        bool clique = true;
        for (std::size_t u = 0; u < n && clique; ++u)
            for (std::size_t v = u + 1; v < n && clique; ++v)
                if ((mask >> u & 1u) && (mask >> v & 1u) && !graph.has_edge(u, v))
                    clique = false;
        if (clique)
            best = size;
    }
    return best;
}

std::vector<double> dense_centrality(const Graph &graph) {
    const std::size_t n = graph.num_nodes();
    std::vector<double> score(n, 0.0);
    std::size_t count = 0;
    const auto component = connected_components(graph, &count);
    for (std::size_t c = 0; c < count; ++c) {
        std::vector<std::size_t> members;
        for (std::size_t v = 0; v < n; ++v)
            if (component[v] == c)
                members.push_back(v);
        if (members.size() < 2)
            continue;
        const auto k = static_cast<Eigen::Index>(members.size());
        Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
        for (Eigen::Index i = 0; i < k; ++i)
            for (Eigen::Index j = 0; j < k; ++j)
                if (i != j)
                    a(i, j) = graph.weight(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)]);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
        Eigen::VectorXd u = solver.eigenvectors().col(k - 1).cwiseAbs();
        u /= u.maxCoeff();
        for (Eigen::Index i = 0; i < k; ++i)
            score[members[static_cast<std::size_t>(i)]] = u(i);
    }
    return score;
}

LogisticResult logistic_irls(const Eigen::MatrixXd &x, const Eigen::VectorXd &y) {
    const Eigen::Index p = x.cols();
    LogisticResult result;
    Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
    for (result.iterations = 1; result.iterations <= 200; ++result.iterations) {
        const Eigen::VectorXd eta = x * beta;
        const Eigen::VectorXd mu = eta.unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
        const Eigen::VectorXd w = mu.cwiseProduct(Eigen::VectorXd::Ones(mu.size()) - mu);
        const Eigen::VectorXd z = eta + (y - mu).cwiseQuotient(w);
        const Eigen::VectorXd sw = w.cwiseSqrt();
        const Eigen::MatrixXd xw = sw.asDiagonal() * x;
        const Eigen::VectorXd next = xw.householderQr().solve(sw.cwiseProduct(z));
        const double change = (next - beta).cwiseAbs().maxCoeff();
        beta = next;
        if (change < 1e-13 * std::max(1.0, beta.cwiseAbs().maxCoeff())) {
            result.converged = true;
            break;
        }
    }
    const Eigen::VectorXd mu = (x * beta).unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
    const Eigen::VectorXd sw = mu.cwiseProduct(Eigen::VectorXd::Ones(mu.size()) - mu).cwiseSqrt();
    // (X'WX)^-1 = R^-1 R^-T from the QR of W^1/2 X.
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(sw.asDiagonal() * x);
    const Eigen::MatrixXd r = qr.matrixQR().topRows(p).triangularView<Eigen::Upper>();
    const Eigen::MatrixXd r_inv = r.triangularView<Eigen::Upper>().solve(Eigen::MatrixXd::Identity(p, p));
    result.coefficients = beta;
    result.std_errors = (r_inv * r_inv.transpose()).diagonal().cwiseSqrt();
    return result;
}

DesignTable parse_design_table(const std::string &text) {
    const auto rows = parse_delimited(text);
    DesignTable table;
    if (rows.empty())
        return table;
    const auto &header = rows[0].fields;
    table.columns.assign(header.begin() + 3, header.end());
    const auto r = static_cast<Eigen::Index>(rows.size() - 1);
    const auto c = static_cast<Eigen::Index>(table.columns.size());
    table.x.resize(r, c);
    table.y.resize(r);
    for (Eigen::Index i = 0; i < r; ++i) {
        const auto &f = rows[static_cast<std::size_t>(i) + 1].fields;
        table.y(i) = std::stod(f[2]);
        for (Eigen::Index j = 0; j < c; ++j)
            table.x(i, j) = std::stod(f[static_cast<std::size_t>(j) + 3]);
    }
    return table;
}

double reference_normal_cdf(double z) {
    return boost::math::cdf(boost::math::normal_distribution<double>(), z);
}

double reference_normal_quantile(double p) {
    return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

} // namespace itemnet::testing

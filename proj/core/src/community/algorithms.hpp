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

#ifndef ITEMNET_SRC_COMMUNITY_ALGORITHMS_HPP_
#define ITEMNET_SRC_COMMUNITY_ALGORITHMS_HPP_

#include <vector>

#include "itemnet/community.hpp"

namespace itemnet::community {

// Each returns raw cluster labels (any integers); detect() compacts them.
std::vector<std::size_t> louvain(const Graph &graph, const DetectOptions &options);
std::vector<std::size_t> fast_greedy(const Graph &graph);
std::vector<std::size_t> label_propagation(const Graph &graph, const DetectOptions &options);
std::vector<std::size_t> walktrap(const Graph &graph, const DetectOptions &options);
std::vector<std::size_t> leading_eigenvector(const Graph &graph);
std::vector<std::size_t> edge_betweenness(const Graph &graph);
std::vector<std::size_t> spinglass(const Graph &graph, const DetectOptions &options);

/// Modularity contribution bookkeeping for agglomerative methods: replays a
/// merge sequence and returns the labels after the first `steps` merges.
std::vector<std::size_t> replay_merges(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>> &merges,
                                       std::size_t steps);

} // namespace itemnet::community

#endif // ITEMNET_SRC_COMMUNITY_ALGORITHMS_HPP_

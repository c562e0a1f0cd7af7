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

#ifndef ITEMNET_GRAPH_IO_HPP_
#define ITEMNET_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "itemnet/graph.hpp"

namespace itemnet {

struct EdgeListColumns {
    std::string source = "source";
    std::string target = "target";
    /// Empty to omit the weight column.
    std::string weight;
};

/// Header row then one row per edge (u < v order, labels).
void write_edge_list(std::ostream &out, const Graph &graph, const EdgeListColumns &columns);

/// Reads an edge list written by write_edge_list. Nodes are `nodes` in the given
/// order; every endpoint must be one of them. Weight column optional.
Graph read_edge_list(const std::filesystem::path &path, std::vector<std::string> nodes,
                     const EdgeListColumns &columns);

/// One label per line.
void write_node_list(std::ostream &out, const std::vector<std::string> &labels);
std::vector<std::string> read_node_list(const std::filesystem::path &path);

/// GraphML with a `label` node key, optional `weight` edge key, and any extra
/// per-node integer attributes (e.g. core numbers).
void write_graphml(std::ostream &out, const Graph &graph,
                   const std::map<std::string, std::vector<long long>> &node_attributes = {});

/// Graphviz DOT (undirected).
void write_dot(std::ostream &out, const Graph &graph,
               const std::map<std::string, std::vector<long long>> &node_attributes = {});

} // namespace itemnet

#endif // ITEMNET_GRAPH_IO_HPP_

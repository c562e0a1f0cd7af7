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

#include "itemnet/graph_io.hpp"

#include <charconv>
#include <ostream>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"

namespace itemnet {

namespace {

std::string xml_escape(const std::string &s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string dot_quote(const std::string &s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

std::size_t column_of(const DelimitedRow &header, const std::string &name, const std::filesystem::path &path) {
    for (std::size_t i = 0; i < header.fields.size(); ++i)
        if (header.fields[i] == name)
            return i;
    throw Error(Errc::MissingColumn, path.string() + " lacks column '" + name + "'");
}

} // namespace

void write_edge_list(std::ostream &out, const Graph &graph, const EdgeListColumns &columns) {
    std::vector<std::string> row{columns.source, columns.target};
    if (!columns.weight.empty())
        row.push_back(columns.weight);
    write_delimited_row(out, row);
    for (const Edge &e : graph.edges()) {
        row[0] = graph.label(e.u);
        row[1] = graph.label(e.v);
        if (!columns.weight.empty())
            row[2] = format_real(e.weight);
        write_delimited_row(out, row);
    }
}

Graph read_edge_list(const std::filesystem::path &path, std::vector<std::string> nodes,
                     const EdgeListColumns &columns) {
    auto rows = read_delimited(path);
    if (rows.empty())
        throw Error(Errc::ParseError, path.string() + " is empty");
    const std::size_t src = column_of(rows[0], columns.source, path);
    const std::size_t dst = column_of(rows[0], columns.target, path);
    std::optional<std::size_t> wcol;
    if (!columns.weight.empty())
        wcol = column_of(rows[0], columns.weight, path);

    Graph nodes_only(nodes);
    std::vector<Edge> edges;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &f = rows[r].fields;
        auto where = [&] { return path.string() + " row " + std::to_string(rows[r].line); };
        if (f.size() != rows[0].fields.size())
            throw Error(Errc::ParseError, where() + ": wrong field count");
        auto u = nodes_only.index_of(f[src]);
        auto v = nodes_only.index_of(f[dst]);
        if (!u || !v)
            throw Error(Errc::ParseError, where() + ": unknown node");
        double w = 1.0;
        if (wcol) {
            const std::string &text = f[*wcol];
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), w);
            if (ec != std::errc{} || ptr != text.data() + text.size())
                throw Error(Errc::ParseError, where() + ": bad weight '" + text + "'");
        }
        edges.push_back({std::min(*u, *v), std::max(*u, *v), w});
    }
    return Graph(std::move(nodes), edges);
}

void write_node_list(std::ostream &out, const std::vector<std::string> &labels) {
    for (const auto &label : labels)
        out << label << '\n';
}

std::vector<std::string> read_node_list(const std::filesystem::path &path) {
    std::string text = read_text_file(path);
    std::vector<std::string> labels;
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string::npos)
            end = text.size();
        std::string line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (!line.empty())
            labels.push_back(std::move(line));
        start = end + 1;
    }
    return labels;
}

void write_graphml(std::ostream &out, const Graph &graph,
                   const std::map<std::string, std::vector<long long>> &node_attributes) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"label\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    for (const auto &[name, values] : node_attributes)
        out << "  <key id=\"" << xml_escape(name) << "\" for=\"node\" attr.name=\"" << xml_escape(name)
            << "\" attr.type=\"long\"/>\n";
    if (graph.is_weighted())
        out << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (node_index v = 0; v < graph.num_nodes(); ++v) {
        out << "    <node id=\"n" << v << "\"><data key=\"label\">" << xml_escape(graph.label(v)) << "</data>";
        for (const auto &[name, values] : node_attributes)
            out << "<data key=\"" << xml_escape(name) << "\">" << values.at(v) << "</data>";
        out << "</node>\n";
    }
    for (const Edge &e : graph.edges()) {
        out << "    <edge source=\"n" << e.u << "\" target=\"n" << e.v << "\"";
        if (graph.is_weighted())
            out << "><data key=\"weight\">" << format_real(e.weight) << "</data></edge>\n";
        else
            out << "/>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream &out, const Graph &graph,
               const std::map<std::string, std::vector<long long>> &node_attributes) {
    out << "graph G {\n";
    for (node_index v = 0; v < graph.num_nodes(); ++v) {
        out << "  " << dot_quote(graph.label(v));
        if (!node_attributes.empty()) {
            out << " [";
            bool first = true;
            for (const auto &[name, values] : node_attributes) {
                out << (first ? "" : ", ") << dot_quote(name) << "=" << values.at(v);
                first = false;
            }
            out << "]";
        }
        out << ";\n";
    }
    for (const Edge &e : graph.edges()) {
        out << "  " << dot_quote(graph.label(e.u)) << " -- " << dot_quote(graph.label(e.v));
        if (graph.is_weighted())
            out << " [weight=" << format_real(e.weight) << "]";
        out << ";\n";
    }
    out << "}\n";
}

} // namespace itemnet

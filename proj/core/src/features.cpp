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


#include "itemnet/features.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <ostream>
#include <unordered_map>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"

namespace itemnet {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

} // namespace

ClusterLexicon::ClusterLexicon(std::vector<std::set<std::string>> clusters) : clusters_(std::move(clusters)) {
    for (const auto &words : clusters_)
        for (const auto &w : words)
            if (!index_.emplace(w, &words - clusters_.data()).second)
                throw Error(Errc::DuplicateId, "word '" + w + "' appears in more than one cluster");
}

std::size_t ClusterLexicon::cluster_of(const std::string &word) const {
    const auto it = index_.find(word);
    return it == index_.end() ? clusters_.size() : it->second;
}

ClusterLexicon lexicons_from_partition(const Graph &bigram_graph, const Partition &partition) {
    if (partition.size() != bigram_graph.num_nodes())
        throw Error(Errc::UncoveredNode, "partition covers " + std::to_string(partition.size()) + " of " +
                                             std::to_string(bigram_graph.num_nodes()) + " words");
    std::vector<std::set<std::string>> clusters(partition.num_clusters());
    for (node_index v = 0; v < bigram_graph.num_nodes(); ++v)
        clusters[partition[v]].insert(bigram_graph.label(v));
    return ClusterLexicon(std::move(clusters));
}

ClusterLexicon parse_lexicon(std::string_view text) {
    std::vector<std::set<std::string>> clusters;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty() || line.front() == '#')
            continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos)
            throw Error(Errc::ParseError, "lexicon line " + std::to_string(line_no) + ": missing ':'");
        std::set<std::string> words;
        std::string_view rest = line.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            std::string_view word = trim(rest.substr(0, comma));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (!word.empty())
                words.emplace(word);
        }
        clusters.push_back(std::move(words));
    }
    return ClusterLexicon(std::move(clusters));
}

ClusterLexicon load_lexicon(const std::string &path) { return parse_lexicon(read_text_file(path)); }

std::vector<std::int64_t> count_features(std::span<const std::string> tokens, const ClusterLexicon &lexicon,
                                         bool presence_only) {
    std::vector<std::int64_t> counts(lexicon.num_clusters(), 0);
    if (presence_only) {
        std::set<std::string> distinct(tokens.begin(), tokens.end());
        for (const auto &t : distinct) {
            const std::size_t k = lexicon.cluster_of(t);
            if (k < counts.size())
                ++counts[k];
        }
        return counts;
    }
    for (const auto &t : tokens) {
        const std::size_t k = lexicon.cluster_of(t);
        if (k < counts.size())
            ++counts[k];
    }
    return counts;
}

std::size_t CovariateTable::find(const std::string &item_id) const {
    const auto it = std::find(item_ids.begin(), item_ids.end(), item_id);
    return static_cast<std::size_t>(it - item_ids.begin());
}

CovariateTable build_covariates(std::span<const TokenizedDoc> corpus, const ClusterLexicon &lexicon,
                                bool presence_only) {
    CovariateTable table;
    for (std::size_t k = 0; k < lexicon.num_clusters(); ++k)
        table.columns.push_back("c" + std::to_string(k + 1));
    std::set<std::string> seen;
    for (const auto &doc : corpus) {
        if (!seen.insert(doc.item_id).second)
            throw Error(Errc::DuplicateId, doc.item_id);
        table.item_ids.push_back(doc.item_id);
        table.counts.push_back(count_features(doc, lexicon, presence_only));
    }
    return table;
}

void write_covariates(std::ostream &out, const CovariateTable &table) {
    std::vector<std::string> row{"item_id"};
    row.insert(row.end(), table.columns.begin(), table.columns.end());
    write_delimited_row(out, row);
    for (std::size_t i = 0; i < table.num_items(); ++i) {
        row.assign(1, table.item_ids[i]);
        for (std::int64_t c : table.counts[i])
            row.push_back(std::to_string(c));
        write_delimited_row(out, row);
    }
}

CovariateTable parse_covariates(std::string_view text) {
    const auto rows = parse_delimited(text);
    if (rows.empty() || rows.front().fields.empty() || rows.front().fields.front() != "item_id")
        throw Error(Errc::MissingColumn, "covariate table needs an item_id column first");
    CovariateTable table;
    table.columns.assign(rows.front().fields.begin() + 1, rows.front().fields.end());
    std::set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto &fields = rows[r].fields;
        const std::string context = "covariates line " + std::to_string(rows[r].line);
        if (fields.size() != table.columns.size() + 1)
            throw Error(Errc::ParseError, context + ": wrong number of fields");
        if (!seen.insert(fields[0]).second)
            throw Error(Errc::DuplicateId, fields[0]);
        std::vector<std::int64_t> counts;
        for (std::size_t k = 1; k < fields.size(); ++k) {
            std::int64_t value = 0;
            const auto &f = fields[k];
            const auto [end, ec] = std::from_chars(f.data(), f.data() + f.size(), value);
            if (ec != std::errc{} || end != f.data() + f.size() || value < 0)
                throw Error(Errc::ParseError, context + ": count '" + f + "' is not a nonnegative integer");
            counts.push_back(value);
        }
        table.item_ids.push_back(fields[0]);
        table.counts.push_back(std::move(counts));
    }
    return table;
}

CovariateTable load_covariates(const std::string &path) { return parse_covariates(read_text_file(path)); }

std::vector<std::pair<std::string, std::uint64_t>> word_frequencies(std::span<const TokenizedDoc> corpus,
                                                                    const StopwordList &stopwords) {
    std::unordered_map<std::string, std::uint64_t> tally;
    for (const auto &doc : corpus)
        for (const auto &t : doc.tokens)
            if (!stopwords.contains(t))
                ++tally[t];
    std::vector<std::pair<std::string, std::uint64_t>> table(tally.begin(), tally.end());
    std::sort(table.begin(), table.end(), [](const auto &a, const auto &b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    return table;
}

void write_word_frequencies(std::ostream &out, std::span<const std::pair<std::string, std::uint64_t>> table) {
    write_delimited_row(out, std::vector<std::string>{"word", "frequency"});
    for (const auto &[word, count] : table)
        write_delimited_row(out, std::vector<std::string>{word, std::to_string(count)});
}

} // namespace itemnet

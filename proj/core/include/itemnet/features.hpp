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


#ifndef ITEMNET_FEATURES_HPP_
#define ITEMNET_FEATURES_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "itemnet/community.hpp"
#include "itemnet/ingest.hpp"
#include "itemnet/textnet.hpp"

namespace itemnet {

/// Word set per cluster; cluster k is column k+1 of a covariate table.
class ClusterLexicon {
public:
    ClusterLexicon() = default;

    /// Throws Error(DuplicateId) when a word appears in two clusters.
    explicit ClusterLexicon(std::vector<std::set<std::string>> clusters);

    std::size_t num_clusters() const noexcept { return clusters_.size(); }
    const std::set<std::string> &words(std::size_t cluster) const { return clusters_.at(cluster); }
    const std::vector<std::set<std::string>> &clusters() const noexcept { return clusters_; }

    /// Cluster holding `word`, or num_clusters() when none does.
    std::size_t cluster_of(const std::string &word) const;

    bool operator==(const ClusterLexicon &) const = default;

private:
    std::vector<std::set<std::string>> clusters_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

/// Cluster k of the lexicon is partition class k. Throws Error(UncoveredNode)
/// when the partition size differs from the graph's node count.
ClusterLexicon lexicons_from_partition(const Graph &bigram_graph, const Partition &partition);

/**
 * Reads a lexicon written one cluster per line as "name: word, word, ...";
 * the text before the colon is ignored and clusters keep file order.
 */
ClusterLexicon parse_lexicon(std::string_view text);
ClusterLexicon load_lexicon(const std::string &path);

/// Entry k counts the tokens of `tokens` that belong to cluster k, with
/// multiplicity unless `presence_only`.
std::vector<std::int64_t> count_features(std::span<const std::string> tokens, const ClusterLexicon &lexicon,
                                         bool presence_only = false);

inline std::vector<std::int64_t> count_features(const TokenizedDoc &doc, const ClusterLexicon &lexicon,
                                                bool presence_only = false) {
    return count_features(doc.tokens, lexicon, presence_only);
}

struct CovariateTable {
    std::vector<std::string> item_ids;
    std::vector<std::string> columns;             ///< c1..cK
    std::vector<std::vector<std::int64_t>> counts; ///< one row per item

    std::size_t num_items() const noexcept { return item_ids.size(); }
    std::size_t num_columns() const noexcept { return columns.size(); }

    /// Row of `item_id`, or num_items() when absent.
    std::size_t find(const std::string &item_id) const;

    bool operator==(const CovariateTable &) const = default;
};

/// One row per document, in corpus order.
CovariateTable build_covariates(std::span<const TokenizedDoc> corpus, const ClusterLexicon &lexicon,
                                bool presence_only = false);

/// Columns item_id, c1..cK.
void write_covariates(std::ostream &out, const CovariateTable &table);

/// Inverse of write_covariates. Throws Error(ParseError) on non-integer or
/// negative counts and Error(DuplicateId) on repeated items.
CovariateTable parse_covariates(std::string_view text);
CovariateTable load_covariates(const std::string &path);

/// Non-stop-word token counts, descending, ties alphabetical.
std::vector<std::pair<std::string, std::uint64_t>> word_frequencies(std::span<const TokenizedDoc> corpus,
                                                                    const StopwordList &stopwords);

/// Columns word, frequency.
void write_word_frequencies(std::ostream &out, std::span<const std::pair<std::string, std::uint64_t>> table);

} // namespace itemnet

#endif // ITEMNET_FEATURES_HPP_

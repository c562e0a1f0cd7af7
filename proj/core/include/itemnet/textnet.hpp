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

#ifndef ITEMNET_TEXTNET_HPP_
#define ITEMNET_TEXTNET_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "itemnet/graph.hpp"
#include "itemnet/ingest.hpp"

namespace itemnet {

struct TokenizedDoc {
    std::string item_id;
    std::vector<std::string> tokens;

    bool operator==(const TokenizedDoc &) const = default;
};

/**
 * Lowercases and splits on anything that is not a letter or digit. Apostrophes
 * and hyphens between two word characters are deleted, joining the halves
 * ("stop-motion's" -> "stopmotions"); elsewhere they separate like other
 * punctuation.
 */
std::vector<std::string> tokenize(std::string_view text);

TokenizedDoc tokenize(std::string item_id, std::string_view text);

/// Documents for every catalog entry with a description, in catalog order.
std::vector<TokenizedDoc> tokenize_catalog(const Catalog &catalog);

enum class StopwordMode {
    RemoveBefore, ///< drop stop-word tokens, then pair what is left
    RemoveAfter,  ///< pair adjacent tokens, then drop pairs holding a stop word
};

std::string_view to_string(StopwordMode mode);
std::optional<StopwordMode> parse_stopword_mode(std::string_view text);

using WordPair = std::pair<std::string, std::string>;

/// Ordered bigram counts; direction is preserved.
struct BigramCounts {
    std::map<WordPair, std::uint64_t> counts;
    StopwordMode mode = StopwordMode::RemoveAfter;

    std::uint64_t total() const;
    bool operator==(const BigramCounts &) const = default;
};

/// Bigrams never cross document boundaries.
BigramCounts extract_bigrams(std::span<const TokenizedDoc> corpus, const StopwordList &stopwords, StopwordMode mode);

/**
 * Moment skewness b1 = m3 / m2^(3/2), m_k = (1/N) sum (x - mean)^k.
 * Throws Error(Degenerate) for fewer than 3 values or zero spread.
 */
double skewness(std::span<const double> values);

struct DispersogramPoint {
    std::uint64_t threshold = 0;
    std::optional<double> skewness; ///< absent when < 3 counts survive or spread is zero

    bool operator==(const DispersogramPoint &) const = default;
};

/// Skewness of the bigram counts that are >= t, for each t. Thresholds must be
/// ascending and >= 1 (Error(OutOfRange) otherwise).
std::vector<DispersogramPoint> dispersogram(const BigramCounts &counts, std::span<const std::uint64_t> thresholds);

/// Writes columns threshold, skewness ("NA" when absent).
void write_dispersogram(std::ostream &out, std::span<const DispersogramPoint> series);

struct ManualThreshold {
    std::uint64_t threshold = 20;
};

struct PlateauThreshold {
    std::size_t window = 3;
    double tolerance = 0.01;
};

using ThresholdRule = std::variant<ManualThreshold, PlateauThreshold>;

struct ThresholdChoice {
    std::uint64_t threshold = 0;
    std::optional<std::string> warning;
};

/**
 * Manual returns its threshold. Plateau returns the first threshold whose next
 * `window` successive skewness differences (all entries present) stay below
 * `tolerance` in absolute value; without such a run it returns the last
 * threshold and a warning. Throws Error(EmptySeries) on an empty series.
 */
ThresholdChoice select_threshold(std::span<const DispersogramPoint> series, const ThresholdRule &rule);

struct BigramGraph {
    Graph graph; ///< words sorted, weights = merged bigram frequency
    std::uint64_t threshold_used = 0;
};

/**
 * Sums (a,b) and (b,a) into one undirected weight and keeps pairs whose merged
 * weight is >= threshold; words without a surviving edge are dropped, as are
 * (a,a) pairs. Throws Error(OutOfRange) for threshold 0 and Error(EmptyGraph)
 * when nothing survives.
 */
BigramGraph build_bigram_graph(const BigramCounts &counts, std::uint64_t threshold);

/// Columns word_a, word_b, count.
void write_bigram_counts(std::ostream &out, const BigramCounts &counts);

} // namespace itemnet

#endif // ITEMNET_TEXTNET_HPP_

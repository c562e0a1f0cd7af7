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

#include "itemnet/textnet.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "unicode.hpp"

namespace itemnet {

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> tokens;
    std::string current;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const char32_t cp = unicode::decode(text, pos);
        switch (unicode::classify(cp)) {
        case unicode::CharClass::WordChar:
            unicode::append_utf8(current, unicode::to_lower(cp));
            break;
        case unicode::CharClass::Joiner:
            // Deleted; the token continues only if a word character follows.
            if (pos < text.size()) {
                std::size_t peek = pos;
                const char32_t next = unicode::decode(text, peek);
                if (!current.empty() && unicode::classify(next) != unicode::CharClass::Separator)
                    break;
            }
            [[fallthrough]];
        case unicode::CharClass::Separator:
            if (!current.empty())
                tokens.push_back(std::move(current));
            current.clear();
            break;
        }
    }
    if (!current.empty())
        tokens.push_back(std::move(current));
    return tokens;
}

TokenizedDoc tokenize(std::string item_id, std::string_view text) { return {std::move(item_id), tokenize(text)}; }

std::vector<TokenizedDoc> tokenize_catalog(const Catalog &catalog) {
    std::vector<TokenizedDoc> docs;
    for (const CatalogEntry &entry : catalog)
        if (entry.description)
            docs.push_back(tokenize(entry.item_id, *entry.description));
    return docs;
}

std::string_view to_string(StopwordMode mode) {
    return mode == StopwordMode::RemoveBefore ? "remove-before" : "remove-after";
}

std::optional<StopwordMode> parse_stopword_mode(std::string_view text) {
    if (text == "remove-before")
        return StopwordMode::RemoveBefore;
    if (text == "remove-after")
        return StopwordMode::RemoveAfter;
    return std::nullopt;
}

std::uint64_t BigramCounts::total() const {
    std::uint64_t sum = 0;
    for (const auto &[pair, c] : counts)
        sum += c;
    return sum;
}

BigramCounts extract_bigrams(std::span<const TokenizedDoc> corpus, const StopwordList &stopwords, StopwordMode mode) {
    BigramCounts out;
    out.mode = mode;
    std::vector<const std::string *> kept;
    for (const TokenizedDoc &doc : corpus) {
        if (mode == StopwordMode::RemoveBefore) {
            kept.clear();
            for (const auto &t : doc.tokens)
                if (!stopwords.contains(t))
                    kept.push_back(&t);
            for (std::size_t i = 1; i < kept.size(); ++i)
                ++out.counts[{*kept[i - 1], *kept[i]}];
        } else {
            for (std::size_t i = 1; i < doc.tokens.size(); ++i) {
                const auto &a = doc.tokens[i - 1];
                const auto &b = doc.tokens[i];
                if (!stopwords.contains(a) && !stopwords.contains(b))
                    ++out.counts[{a, b}];
            }
        }
    }
    return out;
}

double skewness(std::span<const double> values) {
    if (values.size() < 3)
        throw Error(Errc::Degenerate, "skewness needs at least 3 values");
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values)
        mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    if (!(m2 > 0.0))
        throw Error(Errc::Degenerate, "skewness of a constant sequence");
    return m3 / std::pow(m2, 1.5);
}

std::vector<DispersogramPoint> dispersogram(const BigramCounts &counts, std::span<const std::uint64_t> thresholds) {
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
        if (thresholds[i] < 1)
            throw Error(Errc::OutOfRange, "thresholds must be >= 1");
        if (i > 0 && thresholds[i] <= thresholds[i - 1])
            throw Error(Errc::OutOfRange, "thresholds must be strictly ascending");
    }
    std::vector<std::uint64_t> sorted;
    sorted.reserve(counts.counts.size());
    for (const auto &[pair, c] : counts.counts)
        sorted.push_back(c);
    std::sort(sorted.begin(), sorted.end());

    std::vector<DispersogramPoint> series;
    std::vector<double> kept;
    for (std::uint64_t t : thresholds) {
        DispersogramPoint point{t, std::nullopt};
        auto first = std::lower_bound(sorted.begin(), sorted.end(), t);
        kept.assign(first, sorted.end());
        if (kept.size() >= 3) {
            try {
                point.skewness = skewness(kept);
            } catch (const Error &) {
                point.skewness = std::nullopt;
            }
        }
        series.push_back(point);
    }
    return series;
}

void write_dispersogram(std::ostream &out, std::span<const DispersogramPoint> series) {
    std::vector<std::string> row{"threshold", "skewness"};
    write_delimited_row(out, row);
    for (const auto &p : series) {
        row = {std::to_string(p.threshold), p.skewness ? format_real(*p.skewness) : std::string("NA")};
        write_delimited_row(out, row);
    }
}

ThresholdChoice select_threshold(std::span<const DispersogramPoint> series, const ThresholdRule &rule) {
    if (series.empty())
        throw Error(Errc::EmptySeries, "dispersogram series is empty");
    if (const auto *manual = std::get_if<ManualThreshold>(&rule))
        return {manual->threshold, std::nullopt};

    const auto &plateau = std::get<PlateauThreshold>(rule);
    const std::size_t w = std::max<std::size_t>(plateau.window, 1);
    for (std::size_t k = 0; k + w < series.size(); ++k) {
        bool flat = true;
        for (std::size_t i = k; i <= k + w && flat; ++i)
            flat = series[i].skewness.has_value();
        for (std::size_t i = k + 1; i <= k + w && flat; ++i)
            flat = std::fabs(*series[i].skewness - *series[i - 1].skewness) < plateau.tolerance;
        if (flat)
            return {series[k].threshold, std::nullopt};
    }
    return {series.back().threshold,
            "no skewness plateau (window " + std::to_string(w) + ", tolerance " + format_real(plateau.tolerance) +
                "); using the last threshold " + std::to_string(series.back().threshold)};
}

BigramGraph build_bigram_graph(const BigramCounts &counts, std::uint64_t threshold) {
    if (threshold < 1)
        throw Error(Errc::OutOfRange, "threshold must be >= 1");
    std::map<WordPair, std::uint64_t> merged;
    for (const auto &[pair, c] : counts.counts) {
        if (pair.first == pair.second)
            continue;
        if (pair.first < pair.second)
            merged[pair] += c;
        else
            merged[{pair.second, pair.first}] += c;
    }
    std::set<std::string> words;
    for (const auto &[pair, w] : merged) {
        if (w >= threshold) {
            words.insert(pair.first);
            words.insert(pair.second);
        }
    }
    if (words.empty())
        throw Error(Errc::EmptyGraph, "no bigram reaches threshold " + std::to_string(threshold));
    std::vector<std::string> labels(words.begin(), words.end());
    Graph index_only(labels);
    std::vector<Edge> edges;
    for (const auto &[pair, w] : merged) {
        if (w < threshold)
            continue;
        edges.push_back({*index_only.index_of(pair.first), *index_only.index_of(pair.second), static_cast<double>(w)});
    }
    return {Graph(std::move(labels), edges), threshold};
}

void write_bigram_counts(std::ostream &out, const BigramCounts &counts) {
    std::vector<std::string> row{"word_a", "word_b", "count"};
    write_delimited_row(out, row);
    for (const auto &[pair, c] : counts.counts) {
        row = {pair.first, pair.second, std::to_string(c)};
        write_delimited_row(out, row);
    }
}

} // namespace itemnet

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

#include "itemnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <unordered_set>

#include "itemnet/delimited.hpp"
#include "itemnet/error.hpp"
#include "unicode.hpp"

namespace itemnet {

namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view space = " \t\r\n\f\v";
    auto first = s.find_first_not_of(space);
    if (first == std::string_view::npos)
        return {};
    auto last = s.find_last_not_of(space);
    return s.substr(first, last - first + 1);
}

std::string ascii_upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(c >= 'a' && c <= 'z' ? c - 0x20 : c); });
    return out;
}

std::size_t require_column(const DelimitedRow &header, const std::string &name, std::string_view origin) {
    auto it = std::find_if(header.fields.begin(), header.fields.end(),
                           [&](const std::string &f) { return trim(f) == name; });
    if (it == header.fields.end())
        throw Error(Errc::MissingColumn, std::string(origin) + ": header lacks column '" + name + "'");
    return static_cast<std::size_t>(it - header.fields.begin());
}

std::string row_context(std::string_view origin, const DelimitedRow &row) {
    return std::string(origin) + " row " + std::to_string(row.line);
}

void check_width(const DelimitedRow &row, std::size_t width, std::string_view origin) {
    if (row.fields.size() != width)
        throw Error(Errc::ParseError, row_context(origin, row) + ": expected " + std::to_string(width) +
                                          " fields, found " + std::to_string(row.fields.size()));
}

std::optional<double> parse_score(std::string_view raw, std::string_view context) {
    std::string_view text = trim(raw);
    if (text.empty())
        return std::nullopt;
    const std::string upper = ascii_upper(text);
    if (upper == "NA" || upper == "UNKNOWN")
        return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(Errc::ParseError, std::string(context) + ": score '" + std::string(text) + "' is not a number");
    if (!(value >= 0.0 && value <= 10.0))
        throw Error(Errc::ParseError, std::string(context) + ": score " + std::string(text) + " outside [0, 10]");
    return value;
}

std::set<std::string> parse_genres(std::string_view raw) {
    std::set<std::string> genres;
    std::size_t start = 0;
    while (start <= raw.size()) {
        std::size_t end = raw.find(',', start);
        if (end == std::string_view::npos)
            end = raw.size();
        std::string_view genre = trim(raw.substr(start, end - start));
        if (!genre.empty())
            genres.emplace(genre);
        start = end + 1;
    }
    return genres;
}

void add_normalized_words(std::string_view line, std::set<std::string> &words) {
    std::string lowered = unicode::lower(line);
    std::string current;
    auto flush = [&] {
        if (!current.empty())
            words.insert(std::move(current));
        current.clear();
    };
    for (char c : lowered) {
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v')
            flush();
        else if (c != '\'')
            current.push_back(c);
    }
    flush();
}

} // namespace

Catalog parse_catalog(std::string_view text, const CatalogColumns &columns, char delimiter, std::string_view origin) {
    auto rows = parse_delimited(text, delimiter);
    if (rows.empty())
        throw Error(Errc::MissingColumn, std::string(origin) + ": no header row");
    const DelimitedRow &header = rows.front();
    const std::size_t id_col = require_column(header, columns.item_id, origin);
    const std::size_t title_col = require_column(header, columns.title, origin);
    const std::size_t score_col = require_column(header, columns.score, origin);
    const std::size_t genre_col = require_column(header, columns.genres, origin);
    const std::size_t desc_col = require_column(header, columns.description, origin);

    Catalog catalog;
    catalog.reserve(rows.size() - 1);
    std::unordered_set<std::string> seen;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const DelimitedRow &row = rows[r];
        check_width(row, header.fields.size(), origin);
        const std::string context = row_context(origin, row);
        CatalogEntry entry;
        entry.item_id = std::string(trim(row.fields[id_col]));
        if (entry.item_id.empty())
            throw Error(Errc::ParseError, context + ": empty item id");
        if (!seen.insert(entry.item_id).second)
            throw Error(Errc::DuplicateId, entry.item_id);
        entry.title = std::string(trim(row.fields[title_col]));
        entry.score = parse_score(row.fields[score_col], context);
        entry.genres = parse_genres(row.fields[genre_col]);
        std::string_view description = trim(row.fields[desc_col]);
        if (!description.empty())
            entry.description = std::string(description);
        catalog.push_back(std::move(entry));
    }
    return catalog;
}

Catalog load_catalog(const std::filesystem::path &path, const CatalogColumns &columns, char delimiter) {
    return parse_catalog(read_text_file(path), columns, delimiter, path.string());
}

void write_catalog(std::ostream &out, const Catalog &catalog, const CatalogColumns &columns, char delimiter) {
    std::vector<std::string> row{columns.item_id, columns.title, columns.score, columns.genres, columns.description};
    write_delimited_row(out, row, delimiter);
    for (const CatalogEntry &entry : catalog) {
        std::string genres;
        for (const auto &g : entry.genres) {
            if (!genres.empty())
                genres += ", ";
            genres += g;
        }
        row = {entry.item_id, entry.title, entry.score ? format_real(*entry.score) : std::string("NA"), genres,
               entry.description.value_or("")};
        write_delimited_row(out, row, delimiter);
    }
}

InteractionSet::InteractionSet(std::vector<Interaction> rows) : records_(std::move(rows)) {
    const std::size_t raw = records_.size();
    std::sort(records_.begin(), records_.end());
    records_.erase(std::unique(records_.begin(), records_.end()), records_.end());
    duplicates_removed_ = raw - records_.size();
}

InteractionSet parse_interactions(std::string_view text, const InteractionColumns &columns, char delimiter,
                                  std::string_view origin) {
    auto rows = parse_delimited(text, delimiter);
    if (rows.empty())
        throw Error(Errc::MissingColumn, std::string(origin) + ": no header row");
    const DelimitedRow &header = rows.front();
    const std::size_t user_col = require_column(header, columns.user_id, origin);
    const std::size_t item_col = require_column(header, columns.item_id, origin);
    std::vector<Interaction> records;
    records.reserve(rows.size() - 1);
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const DelimitedRow &row = rows[r];
        check_width(row, header.fields.size(), origin);
        Interaction rec{std::string(trim(row.fields[user_col])), std::string(trim(row.fields[item_col]))};
        if (rec.user_id.empty() || rec.item_id.empty())
            throw Error(Errc::ParseError, row_context(origin, row) + ": empty user or item id");
        records.push_back(std::move(rec));
    }
    return InteractionSet(std::move(records));
}

InteractionSet load_interactions(const std::filesystem::path &path, const InteractionColumns &columns,
                                 char delimiter) {
    return parse_interactions(read_text_file(path), columns, delimiter, path.string());
}

StopwordList parse_stopwords(std::string_view text, std::string source) {
    StopwordList list;
    list.source = std::move(source);
    std::size_t start = 0;
    while (start < text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos)
            end = text.size();
        add_normalized_words(text.substr(start, end - start), list.words);
        start = end + 1;
    }
    if (list.words.empty())
        throw Error(Errc::EmptyList, "no usable stop words in " + list.source);
    return list;
}

StopwordList load_stopwords(std::string_view source) {
    if (source == "builtin") {
        StopwordList list;
        list.source = "builtin";
        for (std::string_view w : builtin_stopwords())
            list.words.emplace(w);
        return list;
    }
    std::filesystem::path path(source);
    return parse_stopwords(read_text_file(path), path.string());
}

} // namespace itemnet

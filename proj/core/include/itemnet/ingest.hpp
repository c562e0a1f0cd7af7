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

#ifndef ITEMNET_INGEST_HPP_
#define ITEMNET_INGEST_HPP_

#include <compare>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace itemnet {

struct CatalogEntry {
    std::string item_id;
    std::string title;
    std::optional<double> score; ///< in [0, 10] when present
    std::set<std::string> genres;
    std::optional<std::string> description; ///< never an empty string

    bool operator==(const CatalogEntry &) const = default;
};

using Catalog = std::vector<CatalogEntry>;

/// Header names for each catalog field.
struct CatalogColumns {
    std::string item_id = "item_id";
    std::string title = "title";
    std::string score = "score";
    std::string genres = "genres";
    std::string description = "description";
};

/**
 * Loads the item catalog. Empty fields and the tokens NA / UNKNOWN (any case) in
 * the score column mean "missing"; an empty description means missing. Genres are
 * split on commas and trimmed.
 *
 * Errors: MissingColumn, DuplicateId, ParseError (with the row's line number),
 * IoError.
 */
Catalog load_catalog(const std::filesystem::path &path, const CatalogColumns &columns = {}, char delimiter = ',');

/// Parses catalog text that is already in memory; `origin` names it in errors.
Catalog parse_catalog(std::string_view text, const CatalogColumns &columns = {}, char delimiter = ',',
                      std::string_view origin = "<catalog>");

/// Writes the catalog in the same format load_catalog reads.
void write_catalog(std::ostream &out, const Catalog &catalog, const CatalogColumns &columns = {},
                   char delimiter = ',');

struct Interaction {
    std::string user_id;
    std::string item_id;

    auto operator<=>(const Interaction &) const = default;
};

/// Deduplicated (user, item) pairs, kept sorted.
class InteractionSet {
public:
    InteractionSet() = default;
    explicit InteractionSet(std::vector<Interaction> rows);

    const std::vector<Interaction> &records() const noexcept { return records_; }
    std::size_t size() const noexcept { return records_.size(); }
    bool empty() const noexcept { return records_.empty(); }

    /// Input rows minus distinct pairs.
    std::size_t duplicates_removed() const noexcept { return duplicates_removed_; }

    bool operator==(const InteractionSet &other) const { return records_ == other.records_; }

private:
    std::vector<Interaction> records_;
    std::size_t duplicates_removed_ = 0;
};

struct InteractionColumns {
    std::string user_id = "user_id";
    std::string item_id = "item_id";
};

/// Any further columns (e.g. a rating) are ignored: a row means "watched".
InteractionSet load_interactions(const std::filesystem::path &path, const InteractionColumns &columns = {},
                                 char delimiter = ',');

InteractionSet parse_interactions(std::string_view text, const InteractionColumns &columns = {},
                                  char delimiter = ',', std::string_view origin = "<interactions>");

struct StopwordList {
    std::set<std::string> words;
    std::string source; ///< "builtin" or the file path

    bool contains(std::string_view word) const { return words.find(std::string(word)) != words.end(); }
};

/// "builtin" selects the bundled English list; anything else is a path to a file
/// with one token per line. Tokens are lowercased and apostrophes dropped so they
/// match tokenizer output. Throws Error(EmptyList) when nothing usable remains.
StopwordList load_stopwords(std::string_view source);

StopwordList parse_stopwords(std::string_view text, std::string source);

/// The bundled English list (Snowball, apostrophes removed).
const std::vector<std::string_view> &builtin_stopwords();

} // namespace itemnet

#endif // ITEMNET_INGEST_HPP_

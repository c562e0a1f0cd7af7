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

#ifndef ITEMNET_SRC_UNICODE_HPP_
#define ITEMNET_SRC_UNICODE_HPP_

#include <cstddef>
#include <string>
#include <string_view>

namespace itemnet::unicode {

constexpr char32_t replacement = 0xFFFD;

/// Decodes one code point starting at `pos` and advances it. Malformed
/// sequences consume one byte and yield U+FFFD.
char32_t decode(std::string_view text, std::size_t &pos);

void append_utf8(std::string &out, char32_t cp);

enum class CharClass {
    WordChar,  ///< letter, digit or combining mark: part of a token
    Joiner,    ///< apostrophe or hyphen: removed inside a word, separator otherwise
    Separator, ///< whitespace, punctuation, symbols
};

/// Table-driven classification. Not a full Unicode database: Latin, Greek,
/// Cyrillic and CJK blocks are covered explicitly; unlisted code points above
/// U+00FF count as word characters unless they sit in a known punctuation or
/// symbol block.
CharClass classify(char32_t cp);

/// Simple (one-to-one) lowercase mapping for ASCII, Latin-1, Latin Extended-A,
/// Greek, Cyrillic and fullwidth Latin; identity elsewhere.
char32_t to_lower(char32_t cp);

/// Lowercases a whole UTF-8 string.
std::string lower(std::string_view text);

} // namespace itemnet::unicode

#endif // ITEMNET_SRC_UNICODE_HPP_

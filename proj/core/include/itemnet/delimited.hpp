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

#ifndef ITEMNET_DELIMITED_HPP_
#define ITEMNET_DELIMITED_HPP_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace itemnet {

/// One parsed record; `line` is the 1-based physical line the record starts on.
struct DelimitedRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

/**
 * Quote-aware delimited text (RFC 4180 style): fields may be wrapped in double
 * quotes, a doubled quote inside a quoted field is a literal quote, and quoted
 * fields may span lines. A trailing CR before LF is dropped. Blank lines are
 * skipped. Throws Error(ParseError) on an unterminated quote or stray quote.
 */
std::vector<DelimitedRow> parse_delimited(std::string_view text, char delimiter = ',');

/// Reads and parses a whole file. Throws Error(IoError) if it cannot be opened.
std::vector<DelimitedRow> read_delimited(const std::filesystem::path &path, char delimiter = ',');

std::string read_text_file(const std::filesystem::path &path);

/// Writes one record, quoting fields that contain the delimiter, quotes or newlines.
void write_delimited_row(std::ostream &out, std::span<const std::string> fields, char delimiter = ',');

/// Shortest decimal string that round-trips to the same double.
std::string format_real(double value);

/// Fixed-point formatting with `digits` decimals; "NA" for NaN.
std::string format_fixed(double value, int digits);

} // namespace itemnet

#endif // ITEMNET_DELIMITED_HPP_

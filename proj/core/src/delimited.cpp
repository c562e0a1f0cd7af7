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

#include "itemnet/delimited.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include "itemnet/error.hpp"

namespace itemnet {

std::vector<DelimitedRow> parse_delimited(std::string_view text, char delimiter) {
    std::vector<DelimitedRow> rows;
    DelimitedRow current;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool row_has_content = false;
    std::size_t line = 1;
    std::size_t quote_line = 0;

    auto finish_field = [&] {
        current.fields.push_back(std::move(field));
        field.clear();
        field_was_quoted = false;
    };
    auto finish_row = [&] {
        if (row_has_content) {
            finish_field();
            rows.push_back(std::move(current));
        }
        current = DelimitedRow{};
        field.clear();
        field_was_quoted = false;
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n')
                    ++line;
                field.push_back(c);
            }
            continue;
        }
        if (!row_has_content && c != '\n' && c != '\r') {
            row_has_content = true;
            current.line = line;
        }
        if (c == '"') {
            if (!field.empty() || field_was_quoted)
                throw Error(Errc::ParseError, "stray quote at line " + std::to_string(line));
            in_quotes = true;
            field_was_quoted = true;
            quote_line = line;
        } else if (c == delimiter) {
            finish_field();
        } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
            continue;
        } else if (c == '\n') {
            finish_row();
            ++line;
        } else {
            if (field_was_quoted)
                throw Error(Errc::ParseError, "text after closing quote at line " + std::to_string(line));
            field.push_back(c);
        }
    }
    if (in_quotes)
        throw Error(Errc::ParseError, "unterminated quote opened at line " + std::to_string(quote_line));
    finish_row();
    return rows;
}

std::string read_text_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(Errc::IoError, "cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::vector<DelimitedRow> read_delimited(const std::filesystem::path &path, char delimiter) {
    std::string text = read_text_file(path);
    try {
        return parse_delimited(text, delimiter);
    } catch (const Error &e) {
        throw Error(e.code(), path.string() + ": " + e.what());
    }
}

void write_delimited_row(std::ostream &out, std::span<const std::string> fields, char delimiter) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            out << delimiter;
        const std::string &f = fields[i];
        bool needs_quotes = f.find_first_of(std::string{delimiter, '"', '\n', '\r'}) != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out << '"';
        for (char c : f) {
            if (c == '"')
                out << '"';
            out << c;
        }
        out << '"';
    }
    out << '\n';
}

std::string format_real(double value) {
    if (std::isnan(value))
        return "NA";
    char buffer[64];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string format_fixed(double value, int digits) {
    if (std::isnan(value))
        return "NA";
    char buffer[128];
    auto result = std::to_chars(buffer, buffer + sizeof(buffer), value, std::chars_format::fixed, digits);
    std::string s(buffer, result.ptr);
    // "-0.000" reads badly in tables.
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos)
        s.erase(0, 1);
    return s;
}

} // namespace itemnet

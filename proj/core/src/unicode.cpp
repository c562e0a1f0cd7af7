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

#include "unicode.hpp"

namespace itemnet::unicode {

char32_t decode(std::string_view text, std::size_t &pos) {
    const auto byte = [&](std::size_t i) { return static_cast<unsigned char>(text[i]); };
    const unsigned char lead = byte(pos);
    if (lead < 0x80) {
        ++pos;
        return lead;
    }
    std::size_t length = 0;
    char32_t cp = 0;
    char32_t minimum = 0;
    if ((lead & 0xE0) == 0xC0) {
        length = 2;
        cp = lead & 0x1F;
        minimum = 0x80;
    } else if ((lead & 0xF0) == 0xE0) {
        length = 3;
        cp = lead & 0x0F;
        minimum = 0x800;
    } else if ((lead & 0xF8) == 0xF0) {
        length = 4;
        cp = lead & 0x07;
        minimum = 0x10000;
    } else {
        ++pos;
        return replacement;
    }
    if (pos + length > text.size()) {
        ++pos;
        return replacement;
    }
    for (std::size_t k = 1; k < length; ++k) {
        const unsigned char cont = byte(pos + k);
        if ((cont & 0xC0) != 0x80) {
            ++pos;
            return replacement;
        }
        cp = (cp << 6) | (cont & 0x3F);
    }
    if (cp < minimum || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        ++pos;
        return replacement;
    }
    pos += length;
    return cp;
}

void append_utf8(std::string &out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

CharClass classify(char32_t cp) {
    if (cp < 0x80) {
        if ((cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') || (cp >= '0' && cp <= '9'))
            return CharClass::WordChar;
        if (cp == '\'' || cp == '-')
            return CharClass::Joiner;
        return CharClass::Separator;
    }
    if (cp <= 0xFF) {
        if (cp == 0xAA || cp == 0xB5 || cp == 0xBA)
            return CharClass::WordChar;
        if (cp >= 0xC0 && cp != 0xD7 && cp != 0xF7)
            return CharClass::WordChar;
        return CharClass::Separator;
    }
    // Apostrophes and hyphens outside ASCII.
    if (cp == 0x2018 || cp == 0x2019 || cp == 0x02BC || cp == 0x2010 || cp == 0x2011)
        return CharClass::Joiner;
    if (cp >= 0x0374 && cp <= 0x0375)
        return CharClass::Separator;
    if (cp == 0x037E || cp == 0x0384 || cp == 0x0385 || cp == 0x0387)
        return CharClass::Separator;
    if (cp >= 0x0482 && cp <= 0x0489)
        return CharClass::Separator;
    if (cp >= 0x055A && cp <= 0x055F)
        return CharClass::Separator;
    if (cp >= 0x2000 && cp <= 0x2BFF) // punctuation, super/subscripts, currency, symbols, arrows
        return CharClass::Separator;
    if (cp >= 0x2E00 && cp <= 0x2E7F)
        return CharClass::Separator;
    if (cp >= 0x3000 && cp <= 0x303F)
        return (cp >= 0x3005 && cp <= 0x3007) ? CharClass::WordChar : CharClass::Separator;
    if (cp == 0x30FB) // katakana middle dot
        return CharClass::Separator;
    if (cp >= 0xE000 && cp <= 0xF8FF)
        return CharClass::Separator;
    if (cp >= 0xFE10 && cp <= 0xFE6F)
        return CharClass::Separator;
    if (cp == 0xFEFF || cp == replacement)
        return CharClass::Separator;
    if (cp >= 0xFF00 && cp <= 0xFFEF) {
        if ((cp >= 0xFF10 && cp <= 0xFF19) || (cp >= 0xFF21 && cp <= 0xFF3A) || (cp >= 0xFF41 && cp <= 0xFF5A) ||
            (cp >= 0xFF66 && cp <= 0xFF9F))
            return CharClass::WordChar;
        return CharClass::Separator;
    }
    if (cp >= 0x1F000 && cp <= 0x1FAFF) // emoji and pictographs
        return CharClass::Separator;
    return CharClass::WordChar;
}

char32_t to_lower(char32_t cp) {
    if (cp < 0x80)
        return (cp >= 'A' && cp <= 'Z') ? cp + 0x20 : cp;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7)
        return cp + 0x20;
    if (cp >= 0x0100 && cp <= 0x017F) {
        if (cp == 0x0130)
            return 'i';
        if (cp == 0x0178)
            return 0xFF;
        if ((cp >= 0x0100 && cp <= 0x0137) || (cp >= 0x014A && cp <= 0x0177))
            return (cp % 2 == 0) ? cp + 1 : cp;
        if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E))
            return (cp % 2 == 1) ? cp + 1 : cp;
        return cp;
    }
    if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2)
        return cp + 0x20;
    if (cp == 0x0386)
        return 0x03AC;
    if (cp >= 0x0388 && cp <= 0x038A)
        return cp + 0x25;
    if (cp == 0x038C)
        return 0x03CC;
    if (cp == 0x038E || cp == 0x038F)
        return cp + 0x3F;
    if (cp >= 0x0410 && cp <= 0x042F)
        return cp + 0x20;
    if (cp >= 0x0400 && cp <= 0x040F)
        return cp + 0x50;
    if (cp >= 0xFF21 && cp <= 0xFF3A)
        return cp + 0x20;
    return cp;
}

std::string lower(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t start = pos;
        char32_t cp = decode(text, pos);
        if (cp == replacement && pos == start + 1 && static_cast<unsigned char>(text[start]) >= 0x80) {
            // Keep malformed bytes as they are.
            out.push_back(text[start]);
            continue;
        }
        append_utf8(out, to_lower(cp));
    }
    return out;
}

} // namespace itemnet::unicode

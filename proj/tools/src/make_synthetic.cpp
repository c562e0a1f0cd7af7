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


// Writes the bundled synthetic dataset: a 60-item catalog with generated
// descriptions and about 200 users whose viewing follows four audience groups.
//
//   itemnet_synth OUTPUT_DIR [SEED]

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "itemnet/delimited.hpp"
#include "itemnet/random.hpp"

namespace {

using itemnet::Rng;
using itemnet::uniform_below;
using itemnet::uniform_unit;

struct Theme {
    const char *genre;
    std::vector<const char *> phrases;
    std::vector<const char *> verbs;
};

const std::array<Theme, 4> kThemes{{
    {"Sci-Fi",
     {"space pirates", "distant planet", "outer space", "galactic federation", "save humanity", "giant robot",
      "battle cruiser", "alien invasion", "space station", "mecha pilot"},
     {"attacks", "defends", "explores"}},
    {"School",
     {"high school", "school life", "student council", "club members", "transfer student", "best friends",
      "summer festival", "class president", "tennis club", "exam season"},
     {"joins", "organizes", "befriends"}},
    {"Fantasy",
     {"magical girl", "ancient magic", "demon lord", "another world", "sword and sorcery", "dark spirit",
      "holy grail", "dragon knight", "cursed kingdom", "royal wizard"},
     {"summons", "curses", "seals"}},
    {"Music",
     {"idol group", "rock band", "music video", "live concert", "theme song", "pop star", "dance practice",
      "stage debut", "guitar solo", "record label"},
     {"performs", "records", "rehearses"}},
}};

const std::vector<const char *> kOpeners{
    "The story follows", "Based on the manga,", "This TV series shows", "An original video animation about",
    "The anime adaptation of", "A short film where"};
const std::vector<const char *> kExtraGenres{"Action", "Adventure", "Comedy", "Drama", "Romance", "Slice of Life"};

template <typename T>
const T &pick(const std::vector<T> &v, Rng &rng) {
    return v[uniform_below(rng, v.size())];
}

std::string capitalize(std::string s) {
    if (!s.empty() && s[0] >= 'a' && s[0] <= 'z')
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
    return s;
}

std::string describe(const Theme &theme, Rng &rng) {
    std::string text = pick(kOpeners, rng);
    text += " a ";
    text += pick(theme.phrases, rng);
    text += ".";
    const std::size_t sentences = 2 + uniform_below(rng, 3);
    for (std::size_t s = 0; s < sentences; ++s) {
        text += " ";
        text += capitalize(pick(theme.phrases, rng));
        text += " ";
        text += pick(theme.verbs, rng);
        text += " ";
        // One phrase in eight comes from another theme so word clusters touch.
        const Theme &other = uniform_below(rng, 8) == 0 ? kThemes[uniform_below(rng, kThemes.size())] : theme;
        text += pick(other.phrases, rng);
        text += uniform_below(rng, 4) == 0 ? "!" : ".";
    }
    if (uniform_below(rng, 5) == 0)
        text += " It's a fan-favourite.";
    return text;
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2 || argv[1][0] == '-') {
        std::cerr << "usage: itemnet_synth OUTPUT_DIR [SEED]\n";
        return argc == 2 && std::string(argv[1]) == "--help" ? 0 : 2;
    }
    const std::filesystem::path dir(argv[1]);
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20240601;
    std::filesystem::create_directories(dir);
    Rng rng(seed);

    constexpr std::size_t kItems = 60;
    constexpr std::size_t kUsers = 200;
    std::vector<std::size_t> item_group(kItems);

    {
        std::ofstream out(dir / "catalog.csv", std::ios::binary);
        itemnet::write_delimited_row(out, std::vector<std::string>{"item_id", "title", "score", "genres", "description"});
        for (std::size_t i = 0; i < kItems; ++i) {
            const std::size_t g = i % kThemes.size();
            item_group[i] = g;
            char id[16];
            std::snprintf(id, sizeof id, "a%03zu", i + 1);
            std::vector<std::string> genres{kThemes[g].genre, pick(kExtraGenres, rng)};
            if (uniform_below(rng, 2) == 0)
                genres.emplace_back(pick(kExtraGenres, rng));
            if (i == kItems - 1)
                genres.emplace_back("Hentai");
            std::sort(genres.begin(), genres.end());
            genres.erase(std::unique(genres.begin(), genres.end()), genres.end());
            std::string genre_field;
            for (const auto &x : genres)
                genre_field += (genre_field.empty() ? "" : ", ") + x;

            std::string score = "UNKNOWN";
            if (i % 17 != 5) {
                // Roughly normal scores around 7 (sum of three uniforms).
                const double z = uniform_unit(rng) + uniform_unit(rng) + uniform_unit(rng) - 1.5;
                score = itemnet::format_fixed(std::clamp(7.0 + 2.0 * z, 1.0, 10.0), 2);
            }
            const std::string description = i % 13 == 7 ? "" : describe(kThemes[g], rng);
            itemnet::write_delimited_row(out, std::vector<std::string>{id, std::string("Synthetic Title ") +
                                                                               std::to_string(i + 1),
                                                                       score, genre_field, description});
        }
    }
    {
        std::ofstream out(dir / "interactions.csv", std::ios::binary);
        itemnet::write_delimited_row(out, std::vector<std::string>{"user_id", "item_id"});
        for (std::size_t u = 0; u < kUsers; ++u) {
            const std::size_t home = u % kThemes.size();
            // A fifth of the users also follow a second group.
            const std::size_t second = uniform_below(rng, 5) == 0 ? uniform_below(rng, kThemes.size()) : home;
            char uid[16];
            std::snprintf(uid, sizeof uid, "u%03zu", u + 1);
            for (std::size_t i = 0; i < kItems; ++i) {
                const double p = item_group[i] == home ? 0.8 : item_group[i] == second ? 0.5 : 0.04;
                if (uniform_unit(rng) < p) {
                    char id[16];
                    std::snprintf(id, sizeof id, "a%03zu", i + 1);
                    itemnet::write_delimited_row(out, std::vector<std::string>{uid, id});
                }
            }
        }
    }
    return 0;
}

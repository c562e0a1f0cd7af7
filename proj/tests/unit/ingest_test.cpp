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

#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <functional>
#include <random>
#include <sstream>

#include "itemnet/error.hpp"
#include "itemnet/ingest.hpp"
#include "oracles.hpp"

namespace itemnet {
namespace {

Errc code_of(const std::function<void()> &fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return Errc::IoError;
}

TEST(Catalog, LoadsWellFormedRows) {
    Catalog c = load_catalog(testing::data_path("fixtures/toy_catalog.csv"));
    ASSERT_EQ(c.size(), 4u);
    EXPECT_EQ(c[0].item_id, "a1");
    EXPECT_EQ(c[3].item_id, "a4");
    EXPECT_DOUBLE_EQ(*c[3].score, 9.1);
    EXPECT_EQ(c[3].genres, (std::set<std::string>{"Action", "Comedy"}));
    EXPECT_FALSE(c[2].score.has_value());
    EXPECT_FALSE(c[2].description.has_value());
    EXPECT_TRUE(c[2].genres.empty());
}

TEST(Catalog, DuplicateIdRejected) {
    EXPECT_EQ(code_of([] { parse_catalog("item_id,title,score,genres,description\n5,a,1,,x\n5,b,2,,y\n"); }),
              Errc::DuplicateId);
}

TEST(Catalog, MissingColumnRejected) {
    EXPECT_EQ(code_of([] { parse_catalog("item_id,title,genres,description\n1,a,,x\n"); }), Errc::MissingColumn);
}

TEST(Catalog, MalformedRowsReportLine) {
    try {
        parse_catalog("item_id,title,score,genres,description\n1,a,1,,x\n2,b,eleven,,y\n");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), Errc::ParseError);
        EXPECT_NE(std::string(e.what()).find('3'), std::string::npos) << e.what();
    }
    EXPECT_EQ(code_of([] { parse_catalog("item_id,title,score,genres,description\n1,a,10.5,,x\n"); }),
              Errc::ParseError);
    EXPECT_EQ(code_of([] { parse_catalog("item_id,title,score,genres,description\n1,a,1\n"); }), Errc::ParseError);
}

TEST(Catalog, CustomColumnNames) {
    CatalogColumns cols{"MAL_ID", "Name", "Score", "Genres", "synopsis"};
    Catalog c = parse_catalog("MAL_ID;Name;Score;Genres;synopsis\n1;A;Unknown;Drama;text\n", cols, ';');
    ASSERT_EQ(c.size(), 1u);
    EXPECT_FALSE(c[0].score.has_value());
    EXPECT_EQ(*c[0].description, "text");
}

TEST(Catalog, WriteThenReloadIsIdentical) {
    Catalog c = load_catalog(testing::data_path("fixtures/toy_catalog.csv"));
    std::ostringstream out;
    write_catalog(out, c);
    EXPECT_EQ(parse_catalog(out.str()), c);
    Catalog synthetic = load_catalog(testing::data_path("synthetic/catalog.csv"));
    std::ostringstream again;
    write_catalog(again, synthetic);
    EXPECT_EQ(parse_catalog(again.str()), synthetic);
}

TEST(Interactions, DuplicatesCollapsed) {
    InteractionSet s = parse_interactions("user_id,item_id\nu1,a\nu1,b\nu2,a\nu1,a\nu3,c\n");
    EXPECT_EQ(s.size(), 4u);
    EXPECT_EQ(s.duplicates_removed(), 1u);
}

TEST(Interactions, HeaderOnlyIsEmpty) {
    EXPECT_TRUE(parse_interactions("user_id,item_id\n").empty());
}

TEST(Interactions, ToyFixtureHasEightPairs) {
    EXPECT_EQ(load_interactions(testing::data_path("fixtures/toy_interactions.csv")).size(), 8u);
}

TEST(Interactions, ExtraRatingColumnIgnored) {
    InteractionSet s = parse_interactions("user_id,item_id,rating\nu1,a,0\nu1,a,10\n");
    EXPECT_EQ(s.size(), 1u);
}

TEST(Interactions, PermutationInvariant) {
    std::vector<std::string> rows;
    for (int u = 0; u < 20; ++u)
        for (int i = 0; i < 5; ++i)
            if ((u * 7 + i * 3) % 4 != 0)
                rows.push_back("u" + std::to_string(u) + ",i" + std::to_string(i));
    auto join = [](const std::vector<std::string> &r) {
        std::string text = "user_id,item_id\n";
        for (const auto &line : r)
            text += line + "\n";
        return text;
    };
    InteractionSet base = parse_interactions(join(rows));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(rows.begin(), rows.end(), rng);
        EXPECT_EQ(parse_interactions(join(rows)), base);
    }
}

TEST(Interactions, MalformedRowIsParseError) {
    EXPECT_EQ(code_of([] { parse_interactions("user_id,item_id\nu1\n"); }), Errc::ParseError);
}

TEST(Stopwords, LowercasedAndDeduplicated) {
    StopwordList s = parse_stopwords("The\nthe\na\n", "file");
    EXPECT_EQ(s.words, (std::set<std::string>{"a", "the"}));
}

TEST(Stopwords, BlankLinesSkipped) {
    StopwordList s = load_stopwords(testing::data_path("fixtures/stopwords_blank_lines.txt").string());
    EXPECT_EQ(s.words, (std::set<std::string>{"a", "of", "the"}));
}

TEST(Stopwords, EmptyListRejected) {
    EXPECT_EQ(code_of([] { parse_stopwords("\n  \n", "file"); }), Errc::EmptyList);
}

TEST(Stopwords, BuiltinMatchesBundledFile) {
    StopwordList builtin = load_stopwords("builtin");
    EXPECT_TRUE(builtin.contains("the"));
    EXPECT_EQ(builtin.source, "builtin");
    StopwordList file = load_stopwords(testing::data_path("stopwords_en.txt").string());
    EXPECT_EQ(file.words, builtin.words);
    for (const auto &w : builtin.words) {
        EXPECT_FALSE(w.empty());
        EXPECT_TRUE(std::none_of(w.begin(), w.end(), [](unsigned char ch) {
            return std::isupper(ch) || std::isspace(ch);
        })) << w;
    }
}

} // namespace
} // namespace itemnet

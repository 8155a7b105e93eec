#include "tweetinfo/lexicon.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "tweetinfo/error.hpp"

namespace tweetinfo {
namespace {

SegmentationLexicon parse_lexicon(const std::string& text) {
  std::istringstream in(text);
  return SegmentationLexicon::parse(in, "lexicon.tsv");
}

ExpansionDictionary parse_dictionary(const std::string& text) {
  std::istringstream in(text);
  return ExpansionDictionary::parse(in, "dict.tsv");
}

TEST(SegmentationLexicon, ParsesCountsAndComments) {
  const SegmentationLexicon lexicon = parse_lexicon("# header\nstay\t3\n\nhome\t1\n");
  EXPECT_EQ(lexicon.size(), 2u);
  EXPECT_EQ(lexicon.count("stay"), 3u);
  EXPECT_EQ(lexicon.count("nope"), 0u);
  EXPECT_EQ(lexicon.total_count(), 4u);
  EXPECT_EQ(lexicon.max_word_length(), 4u);
  EXPECT_DOUBLE_EQ(*lexicon.log_probability("home"), std::log(0.25));
  EXPECT_FALSE(lexicon.log_probability("nope").has_value());
}

TEST(SegmentationLexicon, RejectsBadRows) {
  EXPECT_THROW(parse_lexicon("stay\n"), DataError);
  EXPECT_THROW(parse_lexicon("stay\tmany\n"), DataError);
  EXPECT_THROW(parse_lexicon("stay\t-1\n"), DataError);
  EXPECT_THROW(parse_lexicon("Stay\t1\n"), DataError);
  EXPECT_THROW(parse_lexicon("stay\t1\nstay\t2\n"), DataError);
}

TEST(SegmentationLexicon, ErrorNamesLine) {
  try {
    parse_lexicon("a\t1\nb\t1\nc\n");
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("lexicon.tsv:3"), std::string::npos) << e.what();
  }
}

TEST(SegmentationLexicon, BuiltinIsUsable) {
  const SegmentationLexicon& lexicon = SegmentationLexicon::builtin();
  EXPECT_GT(lexicon.size(), 10000u);
  EXPECT_GT(lexicon.count("coronavirus"), 0u);
  EXPECT_GT(lexicon.count("home"), lexicon.count("ho"));
}

TEST(ExpansionDictionary, ParseAndFind) {
  const ExpansionDictionary dict = parse_dictionary("pls\tplease\nlmk\tlet me know\n");
  ASSERT_NE(dict.find("lmk"), nullptr);
  EXPECT_EQ(*dict.find("lmk"), "let me know");
  EXPECT_EQ(dict.find("plz"), nullptr);
}

TEST(ExpansionDictionary, RejectsBadRows) {
  EXPECT_THROW(parse_dictionary("pls\n"), DataError);
  EXPECT_THROW(parse_dictionary("pls\t\n"), DataError);
  EXPECT_THROW(parse_dictionary("PLS\tplease\n"), DataError);
  EXPECT_THROW(parse_dictionary("pls\tplease\npls\tplz\n"), DataError);
}

TEST(ExpansionDictionary, Builtins) {
  EXPECT_GT(ExpansionDictionary::builtin_contractions().size(), 50u);
  EXPECT_GT(ExpansionDictionary::builtin_abbreviations().size(), 20u);
}

TEST(CharacterTable, ParseAndFind) {
  std::istringstream in("00E9\te\n2019\t'\n1F637\t\n");
  const CharacterTable table = CharacterTable::parse(in, "chars.tsv");
  ASSERT_NE(table.find(0xE9), nullptr);
  EXPECT_EQ(*table.find(0xE9), "e");
  ASSERT_NE(table.find(0x1F637), nullptr);
  EXPECT_EQ(*table.find(0x1F637), "");
  EXPECT_EQ(table.find(0xE8), nullptr);
}

TEST(CharacterTable, RejectsBadRows) {
  std::istringstream bad_hex("zz\te\n");
  EXPECT_THROW(CharacterTable::parse(bad_hex, "chars.tsv"), DataError);
  std::istringstream ascii_key("0041\ta\n");
  EXPECT_THROW(CharacterTable::parse(ascii_key, "chars.tsv"), DataError);
}

TEST(Lexicons, MissingFileIsDataError) {
  EXPECT_THROW(SegmentationLexicon::load("/nonexistent/lexicon.tsv"), DataError);
  EXPECT_THROW(ExpansionDictionary::load("/nonexistent/dict.tsv"), DataError);
  EXPECT_THROW(CharacterTable::load("/nonexistent/chars.tsv"), DataError);
}

}  // namespace
}  // namespace tweetinfo

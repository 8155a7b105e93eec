#include "tweetinfo/normalizer.hpp"

#include <gtest/gtest.h>

#include <future>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tweetinfo/corpus.hpp"
#include "tweetinfo/lexicon.hpp"

namespace tweetinfo {
namespace {

using testing::brute_force_segmentation;
using testing::count_substrings;
using testing::lowercase_outside_placeholders;
using testing::oracle_score_words;
using testing::printable_ascii;
using testing::TweetFuzzer;

const SegmentationLexicon& test_lexicon() {
  static const SegmentationLexicon lexicon =
      SegmentationLexicon::load(TWEETINFO_TEST_DATA_DIR "/test_lexicon.tsv");
  return lexicon;
}

const NormalizerResources& resources() { return NormalizerResources::builtin(); }

std::string normalize_builtin(std::string_view text) {
  return normalize_text(text, resources());
}

TEST(Lowercase, Examples) {
  EXPECT_EQ(lowercase("Oklahoma's first confirmed case"), "oklahoma's first confirmed case");
  EXPECT_EQ(lowercase(""), "");
  EXPECT_EQ(lowercase("Cases: 5 HTTPURL"), "cases: 5 HTTPURL");
}

TEST(Lowercase, KeepsPlaceholdersAndLowersNonAscii) {
  EXPECT_EQ(lowercase("@USER HTTPURL @USERX"), "@USER HTTPURL @USERx");
  EXPECT_EQ(lowercase("\xC3\x89T\xC3\x89"), "\xC3\xA9t\xC3\xA9");  // ÉTÉ
  EXPECT_EQ(lowercase("\xCE\x91"), "\xCE\xB1");                    // Greek alpha
}

TEST(ReplaceSpecialChars, Examples) {
  const CharacterTable& table = CharacterTable::builtin();
  EXPECT_EQ(replace_special_chars("\xE2\x80\x9Cquoted\xE2\x80\x9D", table), "\"quoted\"");
  EXPECT_EQ(replace_special_chars("plain ascii", table), "plain ascii");
  EXPECT_EQ(replace_special_chars("caf\xC3\xA9", table), "cafe");
}

TEST(ReplaceSpecialChars, DropsEmojiAndControls) {
  const CharacterTable& table = CharacterTable::builtin();
  EXPECT_EQ(replace_special_chars("mask \xF0\x9F\x98\xB7 on", table), "mask  on");
  EXPECT_EQ(replace_special_chars("a\tb\nc", table), "a b c");
  EXPECT_EQ(replace_special_chars("x\x01y", table), "xy");
  EXPECT_EQ(replace_special_chars("don\xE2\x80\x99t", table), "don't");
  // Truncated UTF-8 is removed rather than passed through.
  EXPECT_EQ(replace_special_chars("ab\xC3", table), "ab");
}

TEST(NormalizePunctuation, Examples) {
  EXPECT_EQ(normalize_punctuation("wow!!!!"), "wow!");
  EXPECT_EQ(normalize_punctuation("a b"), "a b");
  EXPECT_EQ(normalize_punctuation("  wait....  "), "wait...");
}

TEST(NormalizePunctuation, RunsAndSpaces) {
  EXPECT_EQ(normalize_punctuation("ok!!"), "ok!!");
  EXPECT_EQ(normalize_punctuation("ok..."), "ok...");
  EXPECT_EQ(normalize_punctuation("what?!?!"), "what?!?!");
  EXPECT_EQ(normalize_punctuation("a    b"), "a b");
  EXPECT_EQ(normalize_punctuation("   "), "");
}

TEST(ExpandContractions, Examples) {
  const ExpansionDictionary& dict = ExpansionDictionary::builtin_contractions();
  EXPECT_EQ(expand_contractions("don't panic", dict), "do not panic");
  EXPECT_EQ(expand_contractions("it's here", dict), "it is here");
  EXPECT_EQ(expand_contractions("nothing here", dict), "nothing here");
}

TEST(ExpandContractions, LeavesPossessivesAndPartialWords) {
  const ExpansionDictionary& dict = ExpansionDictionary::builtin_contractions();
  EXPECT_EQ(expand_contractions("oklahoma's first", dict), "oklahoma's first");
  EXPECT_EQ(expand_contractions("xdon't", dict), "xdon't");
  EXPECT_EQ(expand_contractions("can't, won't.", dict), "cannot, will not.");
}

TEST(ExpandAbbreviations, Examples) {
  const ExpansionDictionary& dict = ExpansionDictionary::builtin_abbreviations();
  EXPECT_EQ(expand_abbreviations("pls lmk", dict), "please let me know");
  EXPECT_EQ(expand_abbreviations("plus", dict), "plus");
  EXPECT_EQ(expand_abbreviations("govt says", dict), "government says");
}

TEST(ExpandAbbreviations, SkipsPlaceholders) {
  const ExpansionDictionary& dict = ExpansionDictionary::builtin_abbreviations();
  EXPECT_EQ(expand_abbreviations("@USER u ok", dict), "@USER you ok");
  EXPECT_EQ(expand_abbreviations("HTTPURL", dict), "HTTPURL");
}

TEST(SegmentHashtag, Examples) {
  const SegmentationLexicon empty;
  EXPECT_EQ(segment_hashtag("#SmartNews", empty), (std::vector<std::string>{"smart", "news"}));
  EXPECT_EQ(segment_hashtag("#covid19", empty), (std::vector<std::string>{"covid", "19"}));
  EXPECT_EQ(segment_hashtag("#stayhomestaysafe", test_lexicon()),
            (std::vector<std::string>{"stay", "home", "stay", "safe"}));
}

TEST(SegmentHashtag, AgreesWithBruteForce) {
  for (const char* tag : {"#stayhomestaysafe", "#washhands", "#standtogether",
                          "#lockdownnewyork", "#gohome", "#socialdistancing", "#StayHOMENow",
                          "#sandstand2020", "#qqqzz"}) {
    const Segmentation s = segment_hashtag_scored(tag, test_lexicon());
    EXPECT_EQ(s.score, brute_force_segmentation(tag, test_lexicon()).best_score) << tag;
    EXPECT_EQ(s.score, oracle_score_words(s.words, test_lexicon())) << tag;
  }
}

TEST(SegmentHashtag, BuiltinLexicon) {
  const SegmentationLexicon& lexicon = SegmentationLexicon::builtin();
  EXPECT_EQ(segment_hashtag("#stayhomestaysafe", lexicon),
            (std::vector<std::string>{"stay", "home", "stay", "safe"}));
  EXPECT_EQ(segment_hashtag("#StayHomeStaySafe", lexicon),
            (std::vector<std::string>{"stay", "home", "stay", "safe"}));
}

TEST(SegmentHashtag, MalformedTagThrows) {
  const SegmentationLexicon empty;
  EXPECT_THROW(segment_hashtag("SmartNews", empty), std::invalid_argument);
  EXPECT_THROW(segment_hashtag("#", empty), std::invalid_argument);
  EXPECT_THROW(segment_hashtag("", empty), std::invalid_argument);
  EXPECT_THROW(segment_hashtag("#a-b", empty), std::invalid_argument);
}

TEST(SegmentHashtags, InText) {
  const SegmentationLexicon empty;
  EXPECT_EQ(segment_hashtags("news HTTPURL #SmartNews", empty), "news HTTPURL smart news");
  EXPECT_EQ(segment_hashtags("##covid19!", empty), "covid 19!");
  EXPECT_EQ(segment_hashtags("x#y", empty), "x#y");
  EXPECT_EQ(segment_hashtags("# alone", empty), "# alone");
  EXPECT_EQ(segment_hashtags("#HTTPURL", empty), "#HTTPURL");
}

TEST(RawTweet, BlankTextThrows) {
  EXPECT_THROW(RawTweet("1", ""), std::invalid_argument);
  EXPECT_THROW(RawTweet("1", " \t "), std::invalid_argument);
  EXPECT_NO_THROW(RawTweet("1", "x"));
}

TEST(Normalize, SmartNewsTweet) {
  const RawTweet tweet(
      "1", "Oklahoma's first confirmed case of coronavirus is in Tulsa County HTTPURL #SmartNews");
  const NormalizedTweet out = normalize(tweet, resources());
  EXPECT_EQ(out.id, "1");
  EXPECT_EQ(out.text,
            "oklahoma's first confirmed case of coronavirus is in tulsa county HTTPURL smart news");
  EXPECT_EQ(out.steps_applied,
            (std::vector<NormalizationStep>{
                NormalizationStep::kLowercase, NormalizationStep::kSpecialCharacters,
                NormalizationStep::kPunctuation, NormalizationStep::kContractions,
                NormalizationStep::kAbbreviations, NormalizationStep::kHashtags}));
}

TEST(Normalize, GoldenFile) {
  const CorpusSplit raw = load_split(TWEETINFO_TEST_DATA_DIR "/sample_tweets.tsv", SplitName::kTraining);
  const CorpusSplit golden =
      load_split(TWEETINFO_TEST_DATA_DIR "/sample_tweets_normalized.tsv", SplitName::kTraining);
  ASSERT_EQ(raw.size(), golden.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    EXPECT_EQ(normalize_builtin(raw.examples[i].text), golden.examples[i].text);
  }
}

TEST(Normalize, MixedTweet) {
  EXPECT_EQ(normalize_builtin("if anyone pls lmk I don\xE2\x80\x99t feel safe!!!! "
                              "#StayHomeStaySafe #covid19 \xF0\x9F\x98\xB7 @USER caf\xC3\xA9"),
            "if anyone please let me know i do not feel safe! stay home stay safe covid 19 "
            "@USER cafe");
}

TEST(Normalize, HashtagWordsGoThroughDictionaries) {
  EXPECT_EQ(normalize_builtin("#PlsStayHome"), "please stay home");
}

TEST(NormalizeProperties, IdempotentOnPrintableAscii) {
  TweetFuzzer fuzzer(7);
  for (int i = 0; i < 1000; ++i) {
    const std::string input = fuzzer.next_printable();
    const std::string once = normalize_builtin(input);
    ASSERT_EQ(normalize_builtin(once), once) << "input: " << input;
  }
}

TEST(NormalizeProperties, AsciiClosureAndPlaceholders) {
  TweetFuzzer fuzzer(11);
  for (int i = 0; i < 2000; ++i) {
    const std::string input = fuzzer.next();
    const std::string out = normalize_builtin(input);
    ASSERT_TRUE(printable_ascii(out)) << "input: " << input;
    ASSERT_TRUE(lowercase_outside_placeholders(out)) << "input: " << input;
    ASSERT_EQ(count_substrings(out, "HTTPURL"), count_substrings(input, "HTTPURL"))
        << "input: " << input;
    ASSERT_EQ(count_substrings(out, "@USER"), count_substrings(input, "@USER"))
        << "input: " << input;
    ASSERT_EQ(normalize_builtin(out), out) << "input: " << input;
  }
}

TEST(NormalizeProperties, DeterministicAcrossThreads) {
  TweetFuzzer fuzzer(3);
  std::vector<std::string> inputs;
  for (int i = 0; i < 300; ++i) inputs.push_back(fuzzer.next());
  auto run = [&inputs] {
    std::vector<std::string> out;
    for (const auto& s : inputs) out.push_back(normalize_builtin(s));
    return out;
  };
  const std::vector<std::string> expected = run();
  std::vector<std::future<std::vector<std::string>>> futures;
  for (int t = 0; t < 4; ++t) futures.push_back(std::async(std::launch::async, run));
  for (auto& f : futures) EXPECT_EQ(f.get(), expected);
}

// Expansions must already be in final form, otherwise a second pass over
// the output would change it.
TEST(BuiltinDictionaries, ExpansionsAreClosed) {
  const ExpansionDictionary& contractions = ExpansionDictionary::builtin_contractions();
  const ExpansionDictionary& abbreviations = ExpansionDictionary::builtin_abbreviations();
  for (const ExpansionDictionary* dict : {&contractions, &abbreviations}) {
    for (const auto& [key, expansion] : dict->entries()) {
      std::istringstream words(expansion);
      std::string word;
      while (words >> word) {
        EXPECT_EQ(contractions.find(word), nullptr) << key << " -> " << expansion;
        EXPECT_EQ(abbreviations.find(word), nullptr) << key << " -> " << expansion;
      }
      EXPECT_EQ(normalize_builtin(expansion), expansion);
    }
  }
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
  }
  out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  return out;
}

// Steps 1 and 2 applied to any lone non-ASCII code point land in the
// output alphabet, so a later lowercase pass has nothing left to do.
TEST(BuiltinCharacterTable, LowercaseThenReplaceIsClosed) {
  const CharacterTable& table = CharacterTable::builtin();
  for (char32_t cp = 0x80; cp <= 0x10FFFF; ++cp) {
    if (cp >= 0xD800 && cp <= 0xDFFF) continue;
    const std::string out = replace_special_chars(lowercase(encode(cp)), table);
    ASSERT_TRUE(printable_ascii(out)) << std::hex << static_cast<unsigned>(cp);
    ASSERT_EQ(lowercase(out), out) << std::hex << static_cast<unsigned>(cp);
  }
}

}  // namespace
}  // namespace tweetinfo

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/lexicon.hpp"

namespace tweetinfo {

// Dataset mask tokens. Every occurrence is copied verbatim by all steps.
inline constexpr std::string_view kUrlPlaceholder = "HTTPURL";
inline constexpr std::string_view kUserPlaceholder = "@USER";

enum class NormalizationStep : int {
  kLowercase = 1,
  kSpecialCharacters = 2,
  kPunctuation = 3,
  kContractions = 4,
  kAbbreviations = 5,
  kHashtags = 6,
};

class RawTweet {
 public:
  // Throws std::invalid_argument when text is empty or only whitespace.
  RawTweet(std::string id, std::string text);

  const std::string& id() const { return id_; }
  const std::string& text() const { return text_; }

 private:
  std::string id_;
  std::string text_;
};

struct NormalizedTweet {
  std::string id;
  std::string text;
  std::vector<NormalizationStep> steps_applied;
};

// Step 1. Unicode simple lowercase mapping; invalid UTF-8 passes through
// untouched for step 2 to drop.
std::string lowercase(std::string_view text);

// Step 2. Table replacement for non-ASCII code points, deletion otherwise.
// TAB, LF and CR become spaces; other ASCII control characters are deleted.
std::string replace_special_chars(std::string_view text,
                                  const CharacterTable& table);

// Step 3. Runs of three or more of the same punctuation character collapse
// to one ('.' collapses to "..."), whitespace runs become one space, and the
// ends are trimmed.
std::string normalize_punctuation(std::string_view text);

// Steps 4 and 5. A word is a maximal [a-z0-9]+('[a-z0-9]+)* run; words that
// are dictionary keys are replaced by their expansion.
std::string expand_contractions(std::string_view text,
                                const ExpansionDictionary& dictionary);
std::string expand_abbreviations(std::string_view text,
                                 const ExpansionDictionary& dictionary);

struct Segmentation {
  std::vector<std::string> words;
  double score = 0.0;
};

// Score of a segment absent from the lexicon, per character (natural log).
inline constexpr double kUnknownSegmentPenalty = -10.0;

// Splits "#Body" into lowercase words. Camel-case and letter/digit
// boundaries are forced splits; digit runs stay whole; each letter run is
// segmented by dynamic programming maximizing the sum of
// ln(count / total) for known words and kUnknownSegmentPenalty * length for
// unknown ones. Equal scores prefer fewer words, then earlier split points.
// Throws std::invalid_argument unless tag is '#' followed by one or more
// ASCII letters or digits.
Segmentation segment_hashtag_scored(std::string_view tag,
                                    const SegmentationLexicon& lexicon);
std::vector<std::string> segment_hashtag(std::string_view tag,
                                         const SegmentationLexicon& lexicon);

// Step 6 over running text. A hashtag is a run of '#' at the start of the
// text or after a character that is not alphanumeric or an apostrophe,
// followed by [a-z0-9]+. The '#' run is dropped and the body replaced by its
// segmentation joined with single spaces.
std::string segment_hashtags(std::string_view text,
                             const SegmentationLexicon& lexicon);

// Steps 1 to 6 in order. After step 6 the two dictionaries are applied once
// more so that words surfaced from hashtags are expanded in the same pass;
// the result is a fixed point of normalize_text.
std::string normalize_text(std::string_view text,
                           const NormalizerResources& resources);

NormalizedTweet normalize(const RawTweet& tweet,
                          const NormalizerResources& resources);

}  // namespace tweetinfo

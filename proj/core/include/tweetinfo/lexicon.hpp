#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tweetinfo {

// All three lexicon formats are UTF-8, one entry per line, key and value
// separated by the first TAB. Lines starting with '#' and blank lines are
// skipped. Parse errors throw DataError naming the source and line.

/// Unigram counts driving hashtag segmentation.
class SegmentationLexicon {
 public:
  SegmentationLexicon() = default;

  // Keys must be non-empty, lowercase and free of whitespace.
  void add(std::string_view word, std::uint64_t count);

  std::uint64_t count(std::string_view word) const;
  std::uint64_t total_count() const { return total_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t max_word_length() const { return max_word_length_; }

  // ln(count / total_count), or nullopt for absent and zero-count words.
  std::optional<double> log_probability(std::string_view word) const;

  static SegmentationLexicon parse(std::istream& in, std::string_view source);
  static SegmentationLexicon load(const std::filesystem::path& path);
  static const SegmentationLexicon& builtin();

 private:
  std::unordered_map<std::string, std::uint64_t> entries_;
  std::uint64_t total_ = 0;
  std::size_t max_word_length_ = 0;
};

/// Whole-word replacement dictionary (contractions, abbreviations).
///
/// Keys are lowercase words: [a-z0-9]+ groups joined by single apostrophes.
/// Expansions are non-empty lowercase ASCII words separated by single
/// spaces, without apostrophes.
class ExpansionDictionary {
 public:
  ExpansionDictionary() = default;

  void add(std::string_view key, std::string_view expansion);
  const std::string* find(std::string_view key) const;
  std::size_t size() const { return entries_.size(); }

  const std::unordered_map<std::string, std::string>& entries() const {
    return entries_;
  }

  static ExpansionDictionary parse(std::istream& in, std::string_view source);
  static ExpansionDictionary load(const std::filesystem::path& path);
  static const ExpansionDictionary& builtin_contractions();
  static const ExpansionDictionary& builtin_abbreviations();

 private:
  std::unordered_map<std::string, std::string> entries_;
};

/// Non-ASCII code point -> printable ASCII replacement. Keys are hex code
/// points; the value after the TAB is taken verbatim (it may be a space).
class CharacterTable {
 public:
  CharacterTable() = default;

  void add(char32_t code_point, std::string_view replacement);
  const std::string* find(char32_t code_point) const;
  std::size_t size() const { return entries_.size(); }

  static CharacterTable parse(std::istream& in, std::string_view source);
  static CharacterTable load(const std::filesystem::path& path);
  static const CharacterTable& builtin();

 private:
  std::unordered_map<char32_t, std::string> entries_;
};

/// Everything the normalizer reads. Immutable once built; share freely.
struct NormalizerResources {
  CharacterTable characters;
  ExpansionDictionary contractions;
  ExpansionDictionary abbreviations;
  SegmentationLexicon segmentation;

  static const NormalizerResources& builtin();
};

}  // namespace tweetinfo

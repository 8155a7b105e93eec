#include "tweetinfo/lexicon.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "builtin_data.hpp"
#include "text_util.hpp"
#include "tweetinfo/error.hpp"

namespace tweetinfo {
namespace {

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

// Calls fn(key, value, line_number) for every entry line.
template <typename Fn>
void for_each_entry(std::istream& in, std::string_view source, Fn&& fn) {
  std::string line;
  std::size_t line_number = 0;
  while (detail::read_line(in, line)) {
    ++line_number;
    if (line.empty() || line.front() == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw DataError(where(source, line_number) +
                      "expected key<TAB>value, got '" + line + "'");
    }
    const std::string_view view(line);
    try {
      fn(view.substr(0, tab), view.substr(tab + 1), line_number);
    } catch (const std::invalid_argument& e) {
      throw DataError(where(source, line_number) + e.what());
    }
  }
}

std::ifstream open_or_throw(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

bool valid_word_key(std::string_view key) {
  // [a-z0-9]+('[a-z0-9]+)*
  if (key.empty()) return false;
  bool previous_apostrophe = true;
  for (const char c : key) {
    if (c == '\'') {
      if (previous_apostrophe) return false;
      previous_apostrophe = true;
    } else if (detail::is_ascii_lower(c) || detail::is_ascii_digit(c)) {
      previous_apostrophe = false;
    } else {
      return false;
    }
  }
  return !previous_apostrophe;
}

bool valid_expansion(std::string_view expansion) {
  if (expansion.empty() || expansion.front() == ' ' ||
      expansion.back() == ' ') {
    return false;
  }
  char previous = 0;
  for (const char c : expansion) {
    const bool word_char =
        detail::is_ascii_lower(c) || detail::is_ascii_digit(c);
    if (!word_char && c != ' ') return false;
    if (c == ' ' && previous == ' ') return false;
    previous = c;
  }
  return true;
}

}  // namespace

void SegmentationLexicon::add(std::string_view word, std::uint64_t count) {
  if (word.empty()) throw std::invalid_argument("empty lexicon word");
  for (const char c : word) {
    if (detail::is_ascii_upper(c) || c == ' ' || c == '\t' || c == '\n' ||
        c == '\r') {
      throw std::invalid_argument("lexicon word '" + std::string(word) +
                                  "' must be lowercase without whitespace");
    }
  }
  const auto [it, inserted] = entries_.emplace(std::string(word), count);
  if (!inserted) {
    throw std::invalid_argument("duplicate lexicon word '" +
                                std::string(word) + "'");
  }
  total_ += count;
  max_word_length_ = std::max(max_word_length_, word.size());
}

std::uint64_t SegmentationLexicon::count(std::string_view word) const {
  const auto it = entries_.find(std::string(word));
  return it == entries_.end() ? 0 : it->second;
}

std::optional<double> SegmentationLexicon::log_probability(
    std::string_view word) const {
  const std::uint64_t c = count(word);
  if (c == 0) return std::nullopt;
  return std::log(static_cast<double>(c) / static_cast<double>(total_));
}

SegmentationLexicon SegmentationLexicon::parse(std::istream& in,
                                               std::string_view source) {
  SegmentationLexicon lexicon;
  for_each_entry(in, source,
                 [&](std::string_view key, std::string_view value,
                     std::size_t) {
                   std::uint64_t count = 0;
                   const auto [end, ec] = std::from_chars(
                       value.data(), value.data() + value.size(), count);
                   if (ec != std::errc() ||
                       end != value.data() + value.size()) {
                     throw std::invalid_argument(
                         "count must be a non-negative integer, got '" +
                         std::string(value) + "'");
                   }
                   lexicon.add(key, count);
                 });
  return lexicon;
}

SegmentationLexicon SegmentationLexicon::load(
    const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in, path.string());
}

const SegmentationLexicon& SegmentationLexicon::builtin() {
  static const SegmentationLexicon lexicon = [] {
    std::istringstream in{std::string(detail::builtin_segmentation_lexicon())};
    return parse(in, "<builtin segmentation lexicon>");
  }();
  return lexicon;
}

void ExpansionDictionary::add(std::string_view key,
                              std::string_view expansion) {
  if (!valid_word_key(key)) {
    throw std::invalid_argument("invalid dictionary key '" +
                                std::string(key) + "'");
  }
  if (!valid_expansion(expansion)) {
    throw std::invalid_argument("invalid expansion '" +
                                std::string(expansion) + "' for key '" +
                                std::string(key) + "'");
  }
  const auto [it, inserted] =
      entries_.emplace(std::string(key), std::string(expansion));
  if (!inserted) {
    throw std::invalid_argument("duplicate dictionary key '" +
                                std::string(key) + "'");
  }
}

const std::string* ExpansionDictionary::find(std::string_view key) const {
  const auto it = entries_.find(std::string(key));
  return it == entries_.end() ? nullptr : &it->second;
}

ExpansionDictionary ExpansionDictionary::parse(std::istream& in,
                                               std::string_view source) {
  ExpansionDictionary dictionary;
  for_each_entry(in, source,
                 [&](std::string_view key, std::string_view value,
                     std::size_t) { dictionary.add(key, value); });
  return dictionary;
}

ExpansionDictionary ExpansionDictionary::load(
    const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in, path.string());
}

const ExpansionDictionary& ExpansionDictionary::builtin_contractions() {
  static const ExpansionDictionary dictionary = [] {
    std::istringstream in{std::string(detail::builtin_contractions())};
    return parse(in, "<builtin contractions>");
  }();
  return dictionary;
}

const ExpansionDictionary& ExpansionDictionary::builtin_abbreviations() {
  static const ExpansionDictionary dictionary = [] {
    std::istringstream in{std::string(detail::builtin_abbreviations())};
    return parse(in, "<builtin abbreviations>");
  }();
  return dictionary;
}

void CharacterTable::add(char32_t code_point, std::string_view replacement) {
  if (code_point < 0x80 || code_point > 0x10FFFF) {
    throw std::invalid_argument("code point must be non-ASCII Unicode");
  }
  for (const char c : replacement) {
    if (c < 0x20 || c > 0x7E) {
      throw std::invalid_argument("replacement must be printable ASCII");
    }
  }
  const auto [it, inserted] =
      entries_.emplace(code_point, std::string(replacement));
  if (!inserted) throw std::invalid_argument("duplicate code point");
}

const std::string* CharacterTable::find(char32_t code_point) const {
  const auto it = entries_.find(code_point);
  return it == entries_.end() ? nullptr : &it->second;
}

CharacterTable CharacterTable::parse(std::istream& in,
                                     std::string_view source) {
  CharacterTable table;
  for_each_entry(in, source,
                 [&](std::string_view key, std::string_view value,
                     std::size_t) {
                   std::uint32_t cp = 0;
                   const auto [end, ec] = std::from_chars(
                       key.data(), key.data() + key.size(), cp, 16);
                   if (key.empty() || ec != std::errc() ||
                       end != key.data() + key.size()) {
                     throw std::invalid_argument("bad hex code point '" +
                                                 std::string(key) + "'");
                   }
                   table.add(static_cast<char32_t>(cp), value);
                 });
  return table;
}

CharacterTable CharacterTable::load(const std::filesystem::path& path) {
  auto in = open_or_throw(path);
  return parse(in, path.string());
}

const CharacterTable& CharacterTable::builtin() {
  static const CharacterTable table = [] {
    std::istringstream in{std::string(detail::builtin_char_replacements())};
    return parse(in, "<builtin character table>");
  }();
  return table;
}

const NormalizerResources& NormalizerResources::builtin() {
  static const NormalizerResources resources{
      CharacterTable::builtin(), ExpansionDictionary::builtin_contractions(),
      ExpansionDictionary::builtin_abbreviations(),
      SegmentationLexicon::builtin()};
  return resources;
}

}  // namespace tweetinfo

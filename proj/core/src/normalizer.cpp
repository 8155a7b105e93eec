#include "tweetinfo/normalizer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <utility>

#include "text_util.hpp"

namespace tweetinfo {
namespace {

struct CasePair {
  char32_t upper;
  char32_t lower;
};

constexpr CasePair kCaseTable[] = {
#include "case_table.inc"
};

char32_t to_lower(char32_t cp) {
  if (cp < 0x80) {
    return (cp >= 'A' && cp <= 'Z') ? cp + ('a' - 'A') : cp;
  }
  const auto* it = std::lower_bound(
      std::begin(kCaseTable), std::end(kCaseTable), cp,
      [](const CasePair& pair, char32_t value) { return pair.upper < value; });
  if (it != std::end(kCaseTable) && it->upper == cp) return it->lower;
  return cp;
}

// Calls on_text(segment) for text between placeholders and
// on_placeholder(span) for each placeholder, in order.
template <typename OnText, typename OnPlaceholder>
void for_each_segment(std::string_view text, OnText&& on_text,
                      OnPlaceholder&& on_placeholder) {
  std::size_t pos = 0;
  for (const detail::Span& span : detail::find_placeholders(text)) {
    on_text(text.substr(pos, span.begin - pos));
    on_placeholder(text.substr(span.begin, span.end - span.begin));
    pos = span.end;
  }
  on_text(text.substr(pos));
}

bool is_word_char(char c) { return detail::is_ascii_alnum(c); }

std::string expand_words(std::string_view text,
                         const ExpansionDictionary& dictionary) {
  std::string out;
  out.reserve(text.size());
  for_each_segment(
      text,
      [&](std::string_view segment) {
        std::size_t i = 0;
        while (i < segment.size()) {
          if (!is_word_char(segment[i])) {
            out.push_back(segment[i++]);
            continue;
          }
          std::size_t j = i;
          while (j < segment.size() && is_word_char(segment[j])) ++j;
          while (j + 1 < segment.size() && segment[j] == '\'' &&
                 is_word_char(segment[j + 1])) {
            ++j;
            while (j < segment.size() && is_word_char(segment[j])) ++j;
          }
          const std::string_view word = segment.substr(i, j - i);
          if (const std::string* expansion = dictionary.find(word)) {
            out += *expansion;
          } else {
            out += word;
          }
          i = j;
        }
      },
      [&](std::string_view placeholder) { out += placeholder; });
  return out;
}

bool is_whitespace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
         c == '\f';
}

bool forced_boundary(std::string_view body, std::size_t k) {
  const char prev = body[k - 1];
  const char cur = body[k];
  if (detail::is_ascii_digit(prev) != detail::is_ascii_digit(cur)) return true;
  if (detail::is_ascii_lower(prev) && detail::is_ascii_upper(cur)) return true;
  return detail::is_ascii_upper(prev) && detail::is_ascii_upper(cur) &&
         k + 1 < body.size() && detail::is_ascii_lower(body[k + 1]);
}

}  // namespace

RawTweet::RawTweet(std::string id, std::string text)
    : id_(std::move(id)), text_(std::move(text)) {
  if (std::all_of(text_.begin(), text_.end(), is_whitespace)) {
    throw std::invalid_argument("tweet '" + id_ + "' has empty text");
  }
}

std::string lowercase(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for_each_segment(
      text,
      [&](std::string_view segment) {
        std::size_t pos = 0;
        while (pos < segment.size()) {
          const std::size_t start = pos;
          const char32_t cp = detail::decode_utf8(segment, pos);
          if (cp == detail::kInvalidCodePoint) {
            out += segment.substr(start, pos - start);
          } else {
            detail::append_utf8(out, to_lower(cp));
          }
        }
      },
      [&](std::string_view placeholder) { out += placeholder; });
  return out;
}

std::string replace_special_chars(std::string_view text,
                                  const CharacterTable& table) {
  std::string out;
  out.reserve(text.size());
  for_each_segment(
      text,
      [&](std::string_view segment) {
        std::size_t pos = 0;
        while (pos < segment.size()) {
          const char32_t cp = detail::decode_utf8(segment, pos);
          if (cp >= 0x20 && cp < 0x7F) {
            out.push_back(static_cast<char>(cp));
          } else if (cp == '\t' || cp == '\n' || cp == '\r') {
            out.push_back(' ');
          } else if (cp >= 0x80 && cp != detail::kInvalidCodePoint) {
            if (const std::string* replacement = table.find(cp)) {
              out += *replacement;
            }
          }
        }
      },
      [&](std::string_view placeholder) { out += placeholder; });
  return out;
}

std::string normalize_punctuation(std::string_view text) {
  std::string collapsed;
  collapsed.reserve(text.size());
  for_each_segment(
      text,
      [&](std::string_view segment) {
        std::size_t i = 0;
        while (i < segment.size()) {
          const char c = segment[i];
          std::size_t j = i + 1;
          if (detail::is_ascii_punct(c)) {
            while (j < segment.size() && segment[j] == c) ++j;
          }
          const std::size_t run = j - i;
          if (run >= 3) {
            collapsed.append(c == '.' ? 3 : 1, c);
          } else {
            collapsed.append(run, c);
          }
          i = j;
        }
      },
      [&](std::string_view placeholder) { collapsed += placeholder; });

  std::string out;
  out.reserve(collapsed.size());
  bool pending_space = false;
  for (const char c : collapsed) {
    if (is_whitespace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space && !out.empty()) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string expand_contractions(std::string_view text,
                                const ExpansionDictionary& dictionary) {
  return expand_words(text, dictionary);
}

std::string expand_abbreviations(std::string_view text,
                                 const ExpansionDictionary& dictionary) {
  return expand_words(text, dictionary);
}

Segmentation segment_hashtag_scored(std::string_view tag,
                                    const SegmentationLexicon& lexicon) {
  if (tag.size() < 2 || tag.front() != '#') {
    throw std::invalid_argument("malformed hashtag '" + std::string(tag) +
                                "'");
  }
  const std::string_view body = tag.substr(1);
  if (!std::all_of(body.begin(), body.end(), detail::is_ascii_alnum)) {
    throw std::invalid_argument("hashtag body must be ASCII alphanumeric: '" +
                                std::string(tag) + "'");
  }

  const std::size_t n = body.size();
  // Segment (i, j) may not contain a forced boundary strictly inside it.
  // next_boundary[i] is the first forced boundary after i (or n).
  std::vector<std::size_t> next_boundary(n + 1, n);
  for (std::size_t k = n; k-- > 1;) {
    next_boundary[k - 1] = forced_boundary(body, k) ? k : next_boundary[k];
  }
  std::string lowered(body);
  for (char& c : lowered) {
    if (detail::is_ascii_upper(c)) c = static_cast<char>(c - 'A' + 'a');
  }

  struct Cell {
    double score = -std::numeric_limits<double>::infinity();
    std::size_t words = 0;
    std::size_t split = 0;
  };
  std::vector<Cell> best(n + 1);
  best[0].score = 0.0;
  const std::string_view lower_view(lowered);
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (next_boundary[i] < j) continue;
      if (best[i].score == -std::numeric_limits<double>::infinity()) continue;
      const std::size_t length = j - i;
      double segment_score = kUnknownSegmentPenalty * static_cast<double>(length);
      if (length <= lexicon.max_word_length()) {
        if (auto log_p = lexicon.log_probability(lower_view.substr(i, length))) {
          segment_score = *log_p;
        }
      }
      const double candidate = best[i].score + segment_score;
      const std::size_t words = best[i].words + 1;
      if (candidate > best[j].score ||
          (candidate == best[j].score && words < best[j].words)) {
        best[j] = {candidate, words, i};
      }
    }
  }

  Segmentation result;
  result.score = best[n].score;
  for (std::size_t j = n; j > 0; j = best[j].split) {
    result.words.emplace_back(lower_view.substr(best[j].split, j - best[j].split));
  }
  std::reverse(result.words.begin(), result.words.end());
  return result;
}

std::vector<std::string> segment_hashtag(std::string_view tag,
                                         const SegmentationLexicon& lexicon) {
  return segment_hashtag_scored(tag, lexicon).words;
}

std::string segment_hashtags(std::string_view text,
                             const SegmentationLexicon& lexicon) {
  const std::vector<detail::Span> spans = detail::find_placeholders(text);
  auto placeholder_at = [&](std::size_t pos) -> const detail::Span* {
    for (const detail::Span& span : spans) {
      if (pos >= span.begin && pos < span.end) return &span;
    }
    return nullptr;
  };

  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < text.size()) {
    if (const detail::Span* span = placeholder_at(i)) {
      out += text.substr(span->begin, span->end - span->begin);
      i = span->end;
      continue;
    }
    const bool boundary =
        i == 0 || (!detail::is_ascii_alnum(text[i - 1]) && text[i - 1] != '\'' &&
                   text[i - 1] != '#');
    if (text[i] != '#' || !boundary) {
      out.push_back(text[i++]);
      continue;
    }
    std::size_t body_begin = i;
    while (body_begin < text.size() && text[body_begin] == '#') ++body_begin;
    std::size_t body_end = body_begin;
    while (body_end < text.size() && detail::is_ascii_alnum(text[body_end]) &&
           placeholder_at(body_end) == nullptr) {
      ++body_end;
    }
    if (body_end == body_begin) {
      out.append(text.substr(i, body_begin - i));
      i = body_begin;
      continue;
    }
    std::string tag = "#";
    tag += text.substr(body_begin, body_end - body_begin);
    const std::vector<std::string> words = segment_hashtag(tag, lexicon);
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (w > 0) out.push_back(' ');
      out += words[w];
    }
    i = body_end;
  }
  return out;
}

std::string normalize_text(std::string_view text,
                           const NormalizerResources& resources) {
  std::string out = lowercase(text);
  out = replace_special_chars(out, resources.characters);
  out = normalize_punctuation(out);
  out = expand_contractions(out, resources.contractions);
  out = expand_abbreviations(out, resources.abbreviations);
  out = segment_hashtags(out, resources.segmentation);
  out = expand_contractions(out, resources.contractions);
  return expand_abbreviations(out, resources.abbreviations);
}

NormalizedTweet normalize(const RawTweet& tweet,
                          const NormalizerResources& resources) {
  return NormalizedTweet{
      tweet.id(),
      normalize_text(tweet.text(), resources),
      {NormalizationStep::kLowercase, NormalizationStep::kSpecialCharacters,
       NormalizationStep::kPunctuation, NormalizationStep::kContractions,
       NormalizationStep::kAbbreviations, NormalizationStep::kHashtags}};
}

}  // namespace tweetinfo

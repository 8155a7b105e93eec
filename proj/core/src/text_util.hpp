#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo::detail {

inline constexpr char32_t kInvalidCodePoint = 0xFFFFFFFF;

// Decodes one UTF-8 sequence starting at pos and advances pos. Malformed,
// overlong and surrogate sequences yield kInvalidCodePoint and consume one
// byte.
char32_t decode_utf8(std::string_view text, std::size_t& pos);
void append_utf8(std::string& out, char32_t cp);

inline bool is_ascii_lower(char c) { return c >= 'a' && c <= 'z'; }
inline bool is_ascii_upper(char c) { return c >= 'A' && c <= 'Z'; }
inline bool is_ascii_digit(char c) { return c >= '0' && c <= '9'; }
inline bool is_ascii_alpha(char c) {
  return is_ascii_lower(c) || is_ascii_upper(c);
}
inline bool is_ascii_alnum(char c) {
  return is_ascii_alpha(c) || is_ascii_digit(c);
}
inline bool is_space(char c) { return c == ' '; }
inline bool is_ascii_punct(char c) {
  return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') ||
         (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

// Byte ranges [begin, end) of placeholder occurrences, leftmost first and
// non-overlapping.
struct Span {
  std::size_t begin;
  std::size_t end;
};
std::vector<Span> find_placeholders(std::string_view text);

// Reads one line, dropping a trailing CR. Returns false at end of input.
bool read_line(std::istream& in, std::string& line);

std::vector<std::string_view> split_tabs(std::string_view line);

}  // namespace tweetinfo::detail

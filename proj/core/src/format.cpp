#include "tweetinfo/format.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace tweetinfo {

std::string format_round_trip(double value) {
  std::array<char, 64> buffer{};
  const auto result =
      std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
  return std::string(buffer.data(), result.ptr);
}

std::string format_fixed_round_trip(double value, int min_decimals) {
  // Fixed notation of a tiny double can need several hundred digits.
  std::array<char, 1100> buffer{};
  const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(),
                                    value, std::chars_format::fixed);
  std::string text(buffer.data(), result.ptr);
  const std::size_t point = text.find('.');
  int decimals = 0;
  if (point == std::string::npos) {
    text.push_back('.');
  } else {
    decimals = static_cast<int>(text.size() - point - 1);
  }
  if (decimals < min_decimals) text.append(min_decimals - decimals, '0');
  return text;
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buffer{};
  const int length = std::snprintf(buffer.data(), buffer.size(), "%.*f",
                                   decimals, value);
  return std::string(buffer.data(), static_cast<std::size_t>(length));
}

bool parse_double(std::string_view text, double& out) {
  if (text.empty()) return false;
  const char* begin = text.data();
  if (*begin == '+') ++begin;
  const auto [end, ec] = std::from_chars(begin, text.data() + text.size(), out);
  return ec == std::errc() && end == text.data() + text.size() &&
         std::isfinite(out);
}

}  // namespace tweetinfo

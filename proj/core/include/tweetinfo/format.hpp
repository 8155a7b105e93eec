#pragma once

#include <string>
#include <string_view>

namespace tweetinfo {

// Shortest representation that parses back to the same double.
std::string format_round_trip(double value);

// Shortest fixed-notation representation that parses back to the same
// double, with at least min_decimals digits after the point.
std::string format_fixed_round_trip(double value, int min_decimals);

// Fixed notation with exactly `decimals` digits, rounded.
std::string format_fixed(double value, int decimals);

// Parses the whole string as a finite double; false on any leftover input.
bool parse_double(std::string_view text, double& out);

}  // namespace tweetinfo

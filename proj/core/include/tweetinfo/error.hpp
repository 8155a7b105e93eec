#pragma once

#include <stdexcept>
#include <string>

namespace tweetinfo {

// Malformed input files, misaligned prediction sets, bad labels.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training diverged or produced non-finite values.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tweetinfo

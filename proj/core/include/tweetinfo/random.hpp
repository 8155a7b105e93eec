#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace tweetinfo {

/// Portable seeded generator used for every shuffle in the toolkit.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the C++
/// standard. Bounded integers use rejection sampling on the raw 64-bit
/// output (draw x, redraw while x >= n * floor((2^64 - 1) / n), return
/// x mod n) and
/// shuffles are Fisher-Yates from the last index down. No std distribution
/// is involved, so results are identical across standard libraries and can
/// be reproduced in other languages.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    const std::uint64_t limit = n * (UINT64_MAX / n);
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % n;
  }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(uniform_index(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tweetinfo

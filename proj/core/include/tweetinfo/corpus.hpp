#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/label.hpp"

namespace tweetinfo {

enum class SplitName { kTraining, kValidation, kTest };

std::string_view split_name(SplitName name);

struct LabeledExample {
  std::string id;
  std::string text;
  std::optional<Label> label;  // empty for unlabeled prediction input

  friend bool operator==(const LabeledExample&,
                         const LabeledExample&) = default;
};

struct CorpusSplit {
  SplitName name = SplitName::kTraining;
  std::vector<LabeledExample> examples;

  std::size_t size() const { return examples.size(); }
  bool labeled() const;
};

struct SplitStats {
  std::size_t n_informative = 0;
  std::size_t n_uninformative = 0;

  std::size_t total() const { return n_informative + n_uninformative; }
  SplitStats operator+(const SplitStats& other) const {
    return {n_informative + other.n_informative,
            n_uninformative + other.n_uninformative};
  }
  friend bool operator==(const SplitStats&, const SplitStats&) = default;
};

// TSV with header "Id\tText\tLabel" (labeled) or "Id\tText" (unlabeled).
// LF or CRLF line endings. Throws DataError with the line number on a wrong
// column count, an unknown label string or a duplicate id.
CorpusSplit parse_split(std::istream& in, SplitName name,
                        std::string_view source);
CorpusSplit load_split(const std::filesystem::path& path, SplitName name);

// Writes the same format with LF endings; text is copied byte for byte.
void write_split(std::ostream& out, const CorpusSplit& split);
void write_split(const std::filesystem::path& path, const CorpusSplit& split);

// Throws DataError if any label is unknown.
SplitStats stats(const CorpusSplit& split);
LabelSequence gold_labels(const CorpusSplit& split);

/// Down-samples the majority class to the minority count.
///
/// Majority indices are shuffled with Rng(seed) and the first
/// minority-count are kept; the kept examples, in file order, are then
/// shuffled again with the same generator. Throws DataError when a class is
/// missing or a label is unknown.
CorpusSplit rebalance(const CorpusSplit& split, std::uint64_t seed);

}  // namespace tweetinfo

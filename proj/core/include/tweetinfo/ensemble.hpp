#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string_view>

#include "tweetinfo/classifier.hpp"
#include "tweetinfo/label.hpp"

namespace tweetinfo {

enum class VoteMode { kHard, kSoft };

std::string_view vote_mode_name(VoteMode mode);

// Throws DataError unless there is at least one vector and all vectors
// carry the same id sequence.
void check_aligned(std::span<const PredictionVector> vectors);

// Each model votes INFORMATIVE iff p >= threshold; the majority wins. An
// exact tie (even model count) falls back to the soft decision for that
// example.
LabelSequence hard_vote(std::span<const PredictionVector> vectors,
                        double threshold = 0.5);

// INFORMATIVE iff the arithmetic mean probability is >= threshold.
LabelSequence soft_vote(std::span<const PredictionVector> vectors,
                        double threshold = 0.5);

LabelSequence vote(VoteMode mode, std::span<const PredictionVector> vectors,
                   double threshold = 0.5);

// TSV "Id\tLabel" with INFORMATIVE / UNINFORMATIVE labels and a header line.
void write_labels(std::ostream& out, const LabelSequence& labels);
void write_labels(const std::filesystem::path& path,
                  const LabelSequence& labels);
LabelSequence parse_labels(std::istream& in, std::string_view source);
LabelSequence load_labels(const std::filesystem::path& path);

}  // namespace tweetinfo

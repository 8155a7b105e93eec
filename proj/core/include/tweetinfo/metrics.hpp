#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/corpus.hpp"
#include "tweetinfo/label.hpp"

namespace tweetinfo {

// INFORMATIVE is the positive class.
struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const { return tp + fp + fn + tn; }
  friend bool operator==(const ConfusionMatrix&,
                         const ConfusionMatrix&) = default;
};

struct EvaluationReport {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double accuracy = 0.0;
  ConfusionMatrix matrix;
  // Set when the denominator was zero and the metric was reported as 0.
  bool precision_undefined = false;
  bool recall_undefined = false;
};

// Throws DataError when the id sequences differ.
ConfusionMatrix confusion(const LabelSequence& predicted,
                          const LabelSequence& gold);

// Throws std::invalid_argument for an empty matrix.
EvaluationReport report(const ConfusionMatrix& matrix);

enum class ErrorKind { kFalsePositive, kFalseNegative };

// Corpus examples whose prediction disagrees with gold in the given
// direction, in corpus order. All three sequences must share ids.
std::vector<LabeledExample> error_listing(const LabelSequence& predicted,
                                          const LabelSequence& gold,
                                          const CorpusSplit& corpus,
                                          ErrorKind kind);

// Human-readable report: metrics at four decimals and a 2x2 grid.
std::string render_report(std::string_view name,
                          const EvaluationReport& report);

// "key=value" lines: counts, then metrics in round-trip notation, then the
// undefined flags.
std::string render_key_values(const EvaluationReport& report);

}  // namespace tweetinfo

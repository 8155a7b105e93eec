#include "tweetinfo/ensemble.hpp"

#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "text_util.hpp"
#include "tweetinfo/error.hpp"

namespace tweetinfo {
namespace {

constexpr std::string_view kLabelHeader = "Id\tLabel";

void check_threshold(double threshold) {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
}

double mean_probability(std::span<const PredictionVector> vectors,
                        std::size_t row) {
  double sum = 0.0;
  for (const PredictionVector& v : vectors) sum += v.entries[row].probability;
  return sum / static_cast<double>(vectors.size());
}

}  // namespace

std::string_view vote_mode_name(VoteMode mode) {
  return mode == VoteMode::kHard ? "hard" : "soft";
}

void check_aligned(std::span<const PredictionVector> vectors) {
  if (vectors.empty()) throw DataError("ensemble needs at least one model");
  const PredictionVector& first = vectors.front();
  for (const PredictionVector& v : vectors.subspan(1)) {
    if (v.entries.size() != first.entries.size()) {
      throw DataError("model '" + v.model_id + "' has " +
                      std::to_string(v.entries.size()) + " predictions, '" +
                      first.model_id + "' has " +
                      std::to_string(first.entries.size()));
    }
    for (std::size_t i = 0; i < v.entries.size(); ++i) {
      if (v.entries[i].id != first.entries[i].id) {
        throw DataError("model '" + v.model_id + "' row " + std::to_string(i + 1) +
                        " has id '" + v.entries[i].id + "', expected '" +
                        first.entries[i].id + "'");
      }
    }
  }
}

LabelSequence hard_vote(std::span<const PredictionVector> vectors,
                        double threshold) {
  check_threshold(threshold);
  check_aligned(vectors);
  const std::size_t n_models = vectors.size();
  LabelSequence labels;
  labels.reserve(vectors.front().entries.size());
  for (std::size_t row = 0; row < vectors.front().entries.size(); ++row) {
    std::size_t votes = 0;
    for (const PredictionVector& v : vectors) {
      if (v.entries[row].probability >= threshold) ++votes;
    }
    bool informative = 2 * votes > n_models;
    if (2 * votes == n_models) {
      informative = mean_probability(vectors, row) >= threshold;
    }
    labels.push_back({vectors.front().entries[row].id,
                      informative ? Label::kInformative : Label::kUninformative});
  }
  return labels;
}

LabelSequence soft_vote(std::span<const PredictionVector> vectors,
                        double threshold) {
  check_threshold(threshold);
  check_aligned(vectors);
  LabelSequence labels;
  labels.reserve(vectors.front().entries.size());
  for (std::size_t row = 0; row < vectors.front().entries.size(); ++row) {
    const bool informative = mean_probability(vectors, row) >= threshold;
    labels.push_back({vectors.front().entries[row].id,
                      informative ? Label::kInformative : Label::kUninformative});
  }
  return labels;
}

LabelSequence vote(VoteMode mode, std::span<const PredictionVector> vectors,
                   double threshold) {
  return mode == VoteMode::kHard ? hard_vote(vectors, threshold)
                                 : soft_vote(vectors, threshold);
}

void write_labels(std::ostream& out, const LabelSequence& labels) {
  out << kLabelHeader << '\n';
  for (const LabeledId& entry : labels) {
    out << entry.id << '\t' << label_name(entry.label) << '\n';
  }
}

void write_labels(const std::filesystem::path& path,
                  const LabelSequence& labels) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_labels(out, labels);
  if (!out) throw DataError("write failed: " + path.string());
}

LabelSequence parse_labels(std::istream& in, std::string_view source) {
  LabelSequence labels;
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (detail::read_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (line_number == 1 && line == kLabelHeader) continue;
    const std::string prefix =
        std::string(source) + ":" + std::to_string(line_number) + ": ";
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw DataError(prefix + "expected Id<TAB>Label");
    }
    const auto label = parse_label(fields[1]);
    if (!label) {
      throw DataError(prefix + "unknown label '" + std::string(fields[1]) + "'");
    }
    std::string id(fields[0]);
    if (!seen.insert(id).second) {
      throw DataError(prefix + "duplicate id '" + id + "'");
    }
    labels.push_back({std::move(id), *label});
  }
  return labels;
}

LabelSequence load_labels(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_labels(in, path.string());
}

}  // namespace tweetinfo

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tweetinfo/corpus.hpp"
#include "tweetinfo/label.hpp"

namespace tweetinfo {

struct ModelConfig {
  int batch_size = 16;
  double learning_rate = 2e-5;
  int epochs = 1;
  std::uint64_t seed = 0;
  int max_tokens = 96;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;

  friend bool operator==(const ModelConfig&, const ModelConfig&) = default;
};

// The seven fine-tuning configurations of the original system.
std::vector<ModelConfig> reference_model_configs();

class Vocabulary {
 public:
  // Returns the index of feature, inserting it if new.
  std::size_t add(std::string_view feature);
  std::optional<std::size_t> index(std::string_view feature) const;
  std::size_t size() const { return features_.size(); }
  const std::vector<std::string>& features() const { return features_; }

 private:
  std::vector<std::string> features_;
  std::unordered_map<std::string, std::size_t> index_;
};

// (feature index, value) pairs sorted by index, no duplicates.
using SparseVector = std::vector<std::pair<std::size_t, double>>;

// Unigrams then bigrams ("w1 w2") of the first max_tokens whitespace tokens,
// in order of appearance and with repeats.
std::vector<std::string> extract_features(std::string_view text,
                                          int max_tokens);

// Feature counts; features absent from the vocabulary are ignored.
SparseVector featurize(std::string_view text, const Vocabulary& vocabulary,
                       int max_tokens);

double sigmoid(double z);

// Logistic loss of one example and its gradient.
double logistic_loss(std::span<const double> weights, double bias,
                     const SparseVector& x, Label y);

struct LossGradient {
  std::vector<double> weights;
  double bias = 0.0;
};
LossGradient logistic_gradient(std::span<const double> weights, double bias,
                               const SparseVector& x, Label y);

struct ReferenceModel {
  Vocabulary vocabulary;
  std::vector<double> weights;
  double bias = 0.0;
  ModelConfig config;
  // Mean training loss over the whole set after each epoch.
  std::vector<double> epoch_losses;
};

/// Mini-batch SGD on the logistic loss.
///
/// Weights start at zero. Each epoch shuffles the example order with a
/// single Rng(config.seed) and steps by learning_rate times the batch-mean
/// gradient. Throws DataError for unlabeled or single-class data and
/// NumericError when the loss stops being finite.
ReferenceModel train(const CorpusSplit& data, const ModelConfig& config);

double mean_loss(const ReferenceModel& model, const CorpusSplit& data);

struct Prediction {
  std::string id;
  double probability = 0.0;  // of INFORMATIVE

  friend bool operator==(const Prediction&, const Prediction&) = default;
};

struct PredictionVector {
  std::string model_id;
  std::vector<Prediction> entries;
};

// Probabilities are clamped into the open interval (0, 1).
PredictionVector predict(const ReferenceModel& model, const CorpusSplit& data,
                         std::string model_id);

// TSV "Id\tProb" with an optional header line of exactly that text.
// Throws DataError with the line number for unparseable or out-of-range
// probabilities and duplicate ids.
PredictionVector parse_predictions(std::istream& in, std::string model_id,
                                   std::string_view source);
PredictionVector load_predictions(const std::filesystem::path& path);
PredictionVector load_predictions(const std::filesystem::path& path,
                                  std::string model_id);

// Probabilities are written in the shortest fixed notation that reads back
// to the same double, padded to at least six decimals.
void write_predictions(std::ostream& out, const PredictionVector& predictions);
void write_predictions(const std::filesystem::path& path,
                       const PredictionVector& predictions);

// Text format, first line "tweetinfo-model 1". Round-trips exactly.
void save_model(std::ostream& out, const ReferenceModel& model);
void save_model(const std::filesystem::path& path, const ReferenceModel& model);
ReferenceModel load_model(std::istream& in, std::string_view source);
ReferenceModel load_model(const std::filesystem::path& path);

}  // namespace tweetinfo

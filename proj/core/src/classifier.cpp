#include "tweetinfo/classifier.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "text_util.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/format.hpp"
#include "tweetinfo/random.hpp"

namespace tweetinfo {
namespace {

constexpr std::string_view kModelMagic = "tweetinfo-model 1";
constexpr std::string_view kPredictionHeader = "Id\tProb";

double target(Label y) { return y == Label::kInformative ? 1.0 : 0.0; }

double dot(std::span<const double> weights, double bias, const SparseVector& x) {
  double z = bias;
  for (const auto& [index, value] : x) z += weights[index] * value;
  return z;
}

// log(1 + exp(t)) without overflow.
double softplus(double t) {
  return std::max(t, 0.0) + std::log1p(std::exp(-std::abs(t)));
}

std::vector<SparseVector> featurize_all(const CorpusSplit& data,
                                        const Vocabulary& vocabulary,
                                        int max_tokens) {
  std::vector<SparseVector> rows;
  rows.reserve(data.size());
  for (const LabeledExample& e : data.examples) {
    rows.push_back(featurize(e.text, vocabulary, max_tokens));
  }
  return rows;
}

double mean_loss_of(std::span<const double> weights, double bias,
                    const std::vector<SparseVector>& rows,
                    const CorpusSplit& data) {
  double total = 0.0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    total += logistic_loss(weights, bias, rows[i], *data.examples[i].label);
  }
  return rows.empty() ? 0.0 : total / static_cast<double>(rows.size());
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

}  // namespace

void ModelConfig::validate() const {
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  if (!(learning_rate > 0.0 && learning_rate < 1.0)) {
    throw std::invalid_argument("learning_rate must lie in (0, 1)");
  }
  if (max_tokens < 1) throw std::invalid_argument("max_tokens must be >= 1");
}

std::vector<ModelConfig> reference_model_configs() {
  return {
      {16, 2e-5, 1, 96, 96},     {16, 2e-5, 2, 144, 96},
      {16, 2e-5, 2, 380343, 96}, {16, 2e-5, 3, 1, 96},
      {16, 2e-5, 3, 25, 96},     {16, 2e-5, 4, 747, 96},
      {16, 3e-5, 2, 380343, 96},
  };
}

std::size_t Vocabulary::add(std::string_view feature) {
  const auto [it, inserted] =
      index_.emplace(std::string(feature), features_.size());
  if (inserted) features_.emplace_back(feature);
  return it->second;
}

std::optional<std::size_t> Vocabulary::index(std::string_view feature) const {
  const auto it = index_.find(std::string(feature));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> extract_features(std::string_view text,
                                          int max_tokens) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < text.size() && tokens.size() < static_cast<std::size_t>(max_tokens)) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) tokens.push_back(text.substr(i, j - i));
    i = j;
  }
  std::vector<std::string> features;
  features.reserve(tokens.size() * 2);
  for (const auto token : tokens) features.emplace_back(token);
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    std::string bigram(tokens[k - 1]);
    bigram.push_back(' ');
    bigram += tokens[k];
    features.push_back(std::move(bigram));
  }
  return features;
}

SparseVector featurize(std::string_view text, const Vocabulary& vocabulary,
                       int max_tokens) {
  std::vector<std::size_t> indices;
  for (const std::string& feature : extract_features(text, max_tokens)) {
    if (auto index = vocabulary.index(feature)) indices.push_back(*index);
  }
  std::sort(indices.begin(), indices.end());
  SparseVector x;
  for (const std::size_t index : indices) {
    if (!x.empty() && x.back().first == index) {
      x.back().second += 1.0;
    } else {
      x.emplace_back(index, 1.0);
    }
  }
  return x;
}

double sigmoid(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double logistic_loss(std::span<const double> weights, double bias,
                     const SparseVector& x, Label y) {
  const double z = dot(weights, bias, x);
  return y == Label::kInformative ? softplus(-z) : softplus(z);
}

LossGradient logistic_gradient(std::span<const double> weights, double bias,
                               const SparseVector& x, Label y) {
  const double residual = sigmoid(dot(weights, bias, x)) - target(y);
  LossGradient gradient;
  gradient.weights.assign(weights.size(), 0.0);
  for (const auto& [index, value] : x) gradient.weights[index] = residual * value;
  gradient.bias = residual;
  return gradient;
}

ReferenceModel train(const CorpusSplit& data, const ModelConfig& config) {
  config.validate();
  bool has_positive = false;
  bool has_negative = false;
  for (const LabeledExample& e : data.examples) {
    if (!e.label) throw DataError("training example '" + e.id + "' has no label");
    (*e.label == Label::kInformative ? has_positive : has_negative) = true;
  }
  if (!has_positive || !has_negative) {
    throw DataError("training data must contain both classes");
  }

  ReferenceModel model;
  model.config = config;
  for (const LabeledExample& e : data.examples) {
    for (const std::string& feature : extract_features(e.text, config.max_tokens)) {
      model.vocabulary.add(feature);
    }
  }
  model.weights.assign(model.vocabulary.size(), 0.0);
  const std::vector<SparseVector> rows =
      featurize_all(data, model.vocabulary, config.max_tokens);

  Rng rng(config.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  const auto batch = static_cast<std::size_t>(config.batch_size);
  std::vector<double> residuals;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < order.size(); start += batch) {
      const std::size_t end = std::min(start + batch, order.size());
      residuals.clear();
      for (std::size_t k = start; k < end; ++k) {
        const std::size_t i = order[k];
        residuals.push_back(sigmoid(dot(model.weights, model.bias, rows[i])) -
                            target(*data.examples[i].label));
      }
      const double step =
          config.learning_rate / static_cast<double>(end - start);
      double bias_gradient = 0.0;
      for (std::size_t k = start; k < end; ++k) {
        const double r = residuals[k - start];
        for (const auto& [index, value] : rows[order[k]]) {
          model.weights[index] -= step * r * value;
        }
        bias_gradient += r;
      }
      model.bias -= step * bias_gradient;
    }
    const double loss = mean_loss_of(model.weights, model.bias, rows, data);
    if (!std::isfinite(loss) || !std::isfinite(model.bias)) {
      throw NumericError("training diverged in epoch " +
                         std::to_string(epoch + 1));
    }
    model.epoch_losses.push_back(loss);
  }
  return model;
}

double mean_loss(const ReferenceModel& model, const CorpusSplit& data) {
  for (const LabeledExample& e : data.examples) {
    if (!e.label) throw DataError("example '" + e.id + "' has no label");
  }
  return mean_loss_of(model.weights, model.bias,
                      featurize_all(data, model.vocabulary, model.config.max_tokens),
                      data);
}

PredictionVector predict(const ReferenceModel& model, const CorpusSplit& data,
                         std::string model_id) {
  constexpr double kLowest = std::numeric_limits<double>::min();
  const double highest = std::nextafter(1.0, 0.0);
  PredictionVector out{std::move(model_id), {}};
  out.entries.reserve(data.size());
  for (const LabeledExample& e : data.examples) {
    const SparseVector x =
        featurize(e.text, model.vocabulary, model.config.max_tokens);
    const double p = std::clamp(sigmoid(dot(model.weights, model.bias, x)),
                                kLowest, highest);
    out.entries.push_back({e.id, p});
  }
  return out;
}

PredictionVector parse_predictions(std::istream& in, std::string model_id,
                                   std::string_view source) {
  PredictionVector out{std::move(model_id), {}};
  std::unordered_set<std::string> seen;
  std::string line;
  std::size_t line_number = 0;
  while (detail::read_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    if (line_number == 1 && line == kPredictionHeader) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != 2 || fields[0].empty()) {
      throw DataError(where(source, line_number) + "expected Id<TAB>Prob");
    }
    double p = 0.0;
    if (!parse_double(fields[1], p)) {
      throw DataError(where(source, line_number) + "unparseable probability '" +
                      std::string(fields[1]) + "'");
    }
    if (p < 0.0 || p > 1.0) {
      throw DataError(where(source, line_number) + "probability " +
                      std::string(fields[1]) + " outside [0, 1]");
    }
    std::string id(fields[0]);
    if (!seen.insert(id).second) {
      throw DataError(where(source, line_number) + "duplicate id '" + id + "'");
    }
    out.entries.push_back({std::move(id), p});
  }
  return out;
}

PredictionVector load_predictions(const std::filesystem::path& path) {
  return load_predictions(path, path.stem().string());
}

PredictionVector load_predictions(const std::filesystem::path& path,
                                  std::string model_id) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_predictions(in, std::move(model_id), path.string());
}

void write_predictions(std::ostream& out, const PredictionVector& predictions) {
  out << kPredictionHeader << '\n';
  for (const Prediction& p : predictions.entries) {
    out << p.id << '\t' << format_fixed_round_trip(p.probability, 6) << '\n';
  }
}

void write_predictions(const std::filesystem::path& path,
                       const PredictionVector& predictions) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_predictions(out, predictions);
  if (!out) throw DataError("write failed: " + path.string());
}

void save_model(std::ostream& out, const ReferenceModel& model) {
  const ModelConfig& c = model.config;
  out << kModelMagic << '\n'
      << "batch_size " << c.batch_size << '\n'
      << "learning_rate " << format_round_trip(c.learning_rate) << '\n'
      << "epochs " << c.epochs << '\n'
      << "seed " << c.seed << '\n'
      << "max_tokens " << c.max_tokens << '\n'
      << "bias " << format_round_trip(model.bias) << '\n'
      << "epoch_losses " << model.epoch_losses.size();
  for (const double loss : model.epoch_losses) out << ' ' << format_round_trip(loss);
  out << '\n' << "features " << model.vocabulary.size() << '\n';
  const auto& features = model.vocabulary.features();
  for (std::size_t i = 0; i < features.size(); ++i) {
    out << features[i] << '\t' << format_round_trip(model.weights[i]) << '\n';
  }
}

void save_model(const std::filesystem::path& path, const ReferenceModel& model) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  save_model(out, model);
  if (!out) throw DataError("write failed: " + path.string());
}

ReferenceModel load_model(std::istream& in, std::string_view source) {
  std::string line;
  std::size_t line_number = 0;
  auto next_line = [&]() -> std::string& {
    if (!detail::read_line(in, line)) {
      throw DataError(std::string(source) + ": unexpected end of model file");
    }
    ++line_number;
    return line;
  };
  auto field = [&](std::string_view key) -> std::string {
    const std::string& text = next_line();
    if (text.size() <= key.size() || text.compare(0, key.size(), key) != 0 ||
        text[key.size()] != ' ') {
      throw DataError(where(source, line_number) + "expected '" +
                      std::string(key) + "'");
    }
    return text.substr(key.size() + 1);
  };
  auto to_double = [&](std::string_view text) {
    double value = 0.0;
    if (!parse_double(text, value)) {
      throw DataError(where(source, line_number) + "bad number '" +
                      std::string(text) + "'");
    }
    return value;
  };
  auto to_integer = [&](std::string_view text) {
    std::uint64_t value = 0;
    const auto [end, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size()) {
      throw DataError(where(source, line_number) + "bad integer '" +
                      std::string(text) + "'");
    }
    return value;
  };

  if (next_line() != kModelMagic) {
    throw DataError(std::string(source) + ": not a tweetinfo model file");
  }
  ReferenceModel model;
  model.config.batch_size = static_cast<int>(to_integer(field("batch_size")));
  model.config.learning_rate = to_double(field("learning_rate"));
  model.config.epochs = static_cast<int>(to_integer(field("epochs")));
  model.config.seed = to_integer(field("seed"));
  model.config.max_tokens = static_cast<int>(to_integer(field("max_tokens")));
  try {
    model.config.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(std::string(source) + ": " + e.what());
  }
  model.bias = to_double(field("bias"));

  std::istringstream losses(field("epoch_losses"));
  std::string token;
  losses >> token;
  const std::uint64_t n_losses = to_integer(token);
  while (losses >> token) model.epoch_losses.push_back(to_double(token));
  if (model.epoch_losses.size() != n_losses) {
    throw DataError(where(source, line_number) + "epoch loss count mismatch");
  }

  const std::uint64_t n_features = to_integer(field("features"));
  model.weights.reserve(n_features);
  for (std::uint64_t i = 0; i < n_features; ++i) {
    const std::string& text = next_line();
    const std::size_t tab = text.rfind('\t');
    if (tab == std::string::npos) {
      throw DataError(where(source, line_number) + "expected feature<TAB>weight");
    }
    const std::string_view view(text);
    if (model.vocabulary.add(view.substr(0, tab)) != i) {
      throw DataError(where(source, line_number) + "duplicate feature");
    }
    model.weights.push_back(to_double(view.substr(tab + 1)));
  }
  return model;
}

ReferenceModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return load_model(in, path.string());
}

}  // namespace tweetinfo

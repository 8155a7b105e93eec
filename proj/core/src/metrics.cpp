#include "tweetinfo/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tweetinfo/error.hpp"
#include "tweetinfo/format.hpp"

namespace tweetinfo {
namespace {

void check_same_ids(const LabelSequence& predicted, const LabelSequence& gold) {
  if (predicted.size() != gold.size()) {
    throw DataError("predicted has " + std::to_string(predicted.size()) +
                    " labels, gold has " + std::to_string(gold.size()));
  }
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (predicted[i].id != gold[i].id) {
      throw DataError("row " + std::to_string(i + 1) + ": predicted id '" +
                      predicted[i].id + "' does not match gold id '" +
                      gold[i].id + "'");
    }
  }
}

double ratio(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<double>(numerator) / static_cast<double>(denominator);
}

}  // namespace

ConfusionMatrix confusion(const LabelSequence& predicted,
                          const LabelSequence& gold) {
  check_same_ids(predicted, gold);
  ConfusionMatrix m;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool p = predicted[i].label == Label::kInformative;
    const bool g = gold[i].label == Label::kInformative;
    if (p && g) {
      ++m.tp;
    } else if (p) {
      ++m.fp;
    } else if (g) {
      ++m.fn;
    } else {
      ++m.tn;
    }
  }
  return m;
}

EvaluationReport report(const ConfusionMatrix& matrix) {
  if (matrix.total() == 0) {
    throw std::invalid_argument("cannot report on an empty confusion matrix");
  }
  EvaluationReport r;
  r.matrix = matrix;
  if (matrix.tp + matrix.fp == 0) {
    r.precision_undefined = true;
  } else {
    r.precision = ratio(matrix.tp, matrix.tp + matrix.fp);
  }
  if (matrix.tp + matrix.fn == 0) {
    r.recall_undefined = true;
  } else {
    r.recall = ratio(matrix.tp, matrix.tp + matrix.fn);
  }
  if (r.precision + r.recall > 0.0) {
    r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
  }
  r.accuracy = ratio(matrix.tp + matrix.tn, matrix.total());
  return r;
}

std::vector<LabeledExample> error_listing(const LabelSequence& predicted,
                                          const LabelSequence& gold,
                                          const CorpusSplit& corpus,
                                          ErrorKind kind) {
  check_same_ids(predicted, gold);
  if (corpus.size() != gold.size()) {
    throw DataError("corpus size does not match the label sequences");
  }
  const Label wanted_prediction = kind == ErrorKind::kFalsePositive
                                      ? Label::kInformative
                                      : Label::kUninformative;
  std::vector<LabeledExample> errors;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (corpus.examples[i].id != gold[i].id) {
      throw DataError("corpus id '" + corpus.examples[i].id +
                      "' does not match label id '" + gold[i].id + "'");
    }
    if (predicted[i].label == wanted_prediction &&
        gold[i].label != wanted_prediction) {
      errors.push_back(corpus.examples[i]);
    }
  }
  return errors;
}

std::string render_report(std::string_view name,
                          const EvaluationReport& report) {
  const ConfusionMatrix& m = report.matrix;
  std::ostringstream out;
  out << name << '\n'
      << "P    " << format_fixed(report.precision, 4)
      << (report.precision_undefined ? "  (undefined: no positive predictions)" : "")
      << '\n'
      << "R    " << format_fixed(report.recall, 4)
      << (report.recall_undefined ? "  (undefined: no positive gold labels)" : "")
      << '\n'
      << "F1   " << format_fixed(report.f1, 4) << '\n'
      << "Acc  " << format_fixed(report.accuracy, 4) << '\n'
      << '\n';
  const std::string tp = std::to_string(m.tp);
  const std::string fp = std::to_string(m.fp);
  const std::string fn = std::to_string(m.fn);
  const std::string tn = std::to_string(m.tn);
  std::size_t width = 13;
  for (const auto* s : {&tp, &fp, &fn, &tn}) width = std::max(width, s->size());
  auto cell = [width](std::string_view text) {
    std::string padded(width - text.size(), ' ');
    return padded + std::string(text);
  };
  out << cell("") << "  predicted" << '\n'
      << "gold         " << "  " << cell("INFORMATIVE") << "  "
      << cell("UNINFORMATIVE") << '\n'
      << "INFORMATIVE  " << "  " << cell(tp) << "  " << cell(fn) << '\n'
      << "UNINFORMATIVE" << "  " << cell(fp) << "  " << cell(tn) << '\n';
  return out.str();
}

std::string render_key_values(const EvaluationReport& report) {
  const ConfusionMatrix& m = report.matrix;
  std::ostringstream out;
  out << "tp=" << m.tp << '\n'
      << "fp=" << m.fp << '\n'
      << "fn=" << m.fn << '\n'
      << "tn=" << m.tn << '\n'
      << "total=" << m.total() << '\n'
      << "precision=" << format_round_trip(report.precision) << '\n'
      << "recall=" << format_round_trip(report.recall) << '\n'
      << "f1=" << format_round_trip(report.f1) << '\n'
      << "accuracy=" << format_round_trip(report.accuracy) << '\n'
      << "precision_undefined=" << (report.precision_undefined ? 1 : 0) << '\n'
      << "recall_undefined=" << (report.recall_undefined ? 1 : 0) << '\n';
  return out.str();
}

}  // namespace tweetinfo

#include "tweetinfo/metrics.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "oracles.hpp"
#include "tweetinfo/error.hpp"

namespace tweetinfo {
namespace {

using testing::oracle_confusion;

LabelSequence sequence(const std::vector<int>& labels) {
  LabelSequence out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    out.push_back({std::to_string(i), labels[i] ? Label::kInformative : Label::kUninformative});
  }
  return out;
}

TEST(Confusion, Examples) {
  EXPECT_EQ(confusion(sequence({1, 0, 1}), sequence({1, 0, 1})), (ConfusionMatrix{2, 0, 0, 1}));
  EXPECT_EQ(confusion(sequence({1, 1}), sequence({1, 0})), (ConfusionMatrix{1, 1, 0, 0}));
}

TEST(Confusion, RandomMatchesCountingOracle) {
  std::mt19937_64 rng(1);
  std::vector<int> predicted(1000);
  std::vector<int> gold(1000);
  for (int i = 0; i < 1000; ++i) {
    predicted[i] = static_cast<int>(rng() % 2);
    gold[i] = static_cast<int>(rng() % 2);
  }
  const ConfusionMatrix m = confusion(sequence(predicted), sequence(gold));
  EXPECT_EQ(m, oracle_confusion(predicted, gold));
  EXPECT_EQ(m.total(), 1000u);
}

TEST(Confusion, IdMismatch) {
  LabelSequence other = sequence({1, 0});
  other[1].id = "x";
  EXPECT_THROW(confusion(sequence({1, 0}), other), DataError);
  EXPECT_THROW(confusion(sequence({1}), sequence({1, 0})), DataError);
}

TEST(Report, ValidationEnsembleRow) {
  const EvaluationReport r = report({445, 38, 27, 490});
  EXPECT_NEAR(r.precision, 0.9213, 5e-4);
  EXPECT_NEAR(r.recall, 0.9428, 5e-4);
  EXPECT_NEAR(r.f1, 0.9319, 5e-4);
  EXPECT_NEAR(r.accuracy, 0.9350, 5e-4);
}

TEST(Report, TestSetRow) {
  const EvaluationReport r = report({863, 91, 81, 965});
  EXPECT_NEAR(r.precision, 0.9046, 5e-4);
  EXPECT_NEAR(r.recall, 0.9142, 5e-4);
  EXPECT_NEAR(r.f1, 0.9094, 5e-4);
  EXPECT_NEAR(r.accuracy, 0.9140, 5e-4);
}

TEST(Report, Trivial) {
  const EvaluationReport r = report({1, 0, 0, 0});
  EXPECT_EQ(r.precision, 1.0);
  EXPECT_EQ(r.recall, 1.0);
  EXPECT_EQ(r.f1, 1.0);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_FALSE(r.precision_undefined);
}

TEST(Report, ZeroDenominators) {
  const EvaluationReport r = report({0, 0, 0, 5});
  EXPECT_EQ(r.precision, 0.0);
  EXPECT_EQ(r.recall, 0.0);
  EXPECT_EQ(r.f1, 0.0);
  EXPECT_EQ(r.accuracy, 1.0);
  EXPECT_TRUE(r.precision_undefined);
  EXPECT_TRUE(r.recall_undefined);
  EXPECT_THROW(report({0, 0, 0, 0}), std::invalid_argument);
}

// Published shared-task scores rounded to four decimals: P, R, F1.
TEST(Report, PublishedF1IsHarmonicMean) {
  const double rows[][3] = {
      {.9179, .9237, .9208}, {.9059, .9386, .9220}, {.9202, .9280, .9241},
      {.9043, .9407, .9221}, {.9236, .9216, .9226}, {.9076, .9364, .9218},
      {.9216, .9216, .9216}, {.9174, .9407, .9289}, {.9213, .9428, .9319},
      {.9135, .9057, .9096}, {.9029, .9163, .9096}, {.9046, .9142, .9094},
      {.8919, .9269, .9091}, {.8918, .9258, .9085}};
  for (const auto& row : rows) {
    EXPECT_NEAR(2 * row[0] * row[1] / (row[0] + row[1]), row[2], 5e-4);
  }
}

TEST(Report, TransposedMatrixGivesNegativeClass) {
  const ConfusionMatrix m{445, 38, 27, 490};
  const ConfusionMatrix flipped{m.tn, m.fn, m.fp, m.tp};
  const EvaluationReport a = report(m);
  const EvaluationReport b = report(flipped);
  EXPECT_EQ(b.precision, 490.0 / (490 + 27));
  EXPECT_EQ(b.recall, 490.0 / (490 + 38));
  EXPECT_EQ(a.accuracy, b.accuracy);
}

TEST(Report, Bounds) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const ConfusionMatrix m{rng() % 20, rng() % 20, rng() % 20, rng() % 20};
    if (m.total() == 0) continue;
    const EvaluationReport r = report(m);
    for (const double v : {r.precision, r.recall, r.f1, r.accuracy}) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
    EXPECT_EQ(r.f1 == 0.0, m.tp == 0);
    if (m.tp > 0) {
      EXPECT_LE(std::min(r.precision, r.recall), r.f1 + 1e-15);
      EXPECT_GE(std::max(r.precision, r.recall), r.f1 - 1e-15);
    }
  }
}

CorpusSplit corpus_for(const std::vector<int>& gold) {
  CorpusSplit split;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    split.examples.push_back({std::to_string(i), "text " + std::to_string(i),
                              gold[i] ? Label::kInformative : Label::kUninformative});
  }
  return split;
}

TEST(ErrorListing, Examples) {
  const std::vector<int> gold = {1, 0, 1, 0};
  const CorpusSplit corpus = corpus_for(gold);
  EXPECT_TRUE(error_listing(sequence(gold), sequence(gold), corpus, ErrorKind::kFalsePositive).empty());
  EXPECT_TRUE(error_listing(sequence(gold), sequence(gold), corpus, ErrorKind::kFalseNegative).empty());
  const auto fn = error_listing(sequence({1, 0, 0, 0}), sequence(gold), corpus,
                                ErrorKind::kFalseNegative);
  ASSERT_EQ(fn.size(), 1u);
  EXPECT_EQ(fn[0].id, "2");
  EXPECT_TRUE(error_listing(sequence({1, 0, 0, 0}), sequence(gold), corpus,
                            ErrorKind::kFalsePositive).empty());
}

TEST(ErrorListing, PartitionsDisagreements) {
  std::mt19937_64 rng(3);
  std::vector<int> predicted(200);
  std::vector<int> gold(200);
  for (int i = 0; i < 200; ++i) {
    predicted[i] = static_cast<int>(rng() % 2);
    gold[i] = static_cast<int>(rng() % 2);
  }
  const CorpusSplit corpus = corpus_for(gold);
  const auto fp = error_listing(sequence(predicted), sequence(gold), corpus, ErrorKind::kFalsePositive);
  const auto fn = error_listing(sequence(predicted), sequence(gold), corpus, ErrorKind::kFalseNegative);
  std::set<std::string> expected;
  for (int i = 0; i < 200; ++i) {
    if (predicted[i] != gold[i]) expected.insert(std::to_string(i));
  }
  std::set<std::string> got;
  for (const auto& e : fp) EXPECT_TRUE(got.insert(e.id).second);
  for (const auto& e : fn) EXPECT_TRUE(got.insert(e.id).second);
  EXPECT_EQ(got, expected);
  EXPECT_TRUE(std::is_sorted(fp.begin(), fp.end(), [](const auto& a, const auto& b) {
    return std::stoi(a.id) < std::stoi(b.id);
  }));
}

TEST(Render, TextAndKeyValues) {
  const EvaluationReport r = report({445, 38, 27, 490});
  const std::string text = render_report("hard", r);
  EXPECT_NE(text.find("0.9213"), std::string::npos) << text;
  EXPECT_NE(text.find("0.9319"), std::string::npos) << text;
  EXPECT_NE(text.find("445"), std::string::npos) << text;
  const std::string kv = render_key_values(r);
  EXPECT_NE(kv.find("tp=445\n"), std::string::npos) << kv;
  EXPECT_NE(kv.find("accuracy=0.935\n"), std::string::npos) << kv;
}

}  // namespace
}  // namespace tweetinfo

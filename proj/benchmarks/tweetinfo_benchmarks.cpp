#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "tweetinfo/classifier.hpp"
#include "tweetinfo/ensemble.hpp"
#include "tweetinfo/metrics.hpp"
#include "tweetinfo/normalizer.hpp"

namespace {

using namespace tweetinfo;

const char* kTweets[] = {
    "Oklahoma's first confirmed case of coronavirus is in Tulsa County HTTPURL #SmartNews",
    "Ladies and gentlemen, put your hands together for... Johnny Covid and the Underlying "
    "Comorbidities!",
    "if anyone pls lmk I don\xE2\x80\x99t feel safe!!!! #StayHomeStaySafe #covid19 "
    "\xF0\x9F\x98\xB7 @USER caf\xC3\xA9",
    "BREAKING: 1,204 new cases and 37 deaths reported in #NewYorkCity today HTTPURL",
};

void BM_NormalizeTweet(benchmark::State& state) {
  const NormalizerResources& resources = NormalizerResources::builtin();
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize_text(kTweets[i++ % 4], resources));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NormalizeTweet);

void BM_SegmentHashtag(benchmark::State& state) {
  const SegmentationLexicon& lexicon = SegmentationLexicon::builtin();
  const std::string tag = "#" + std::string(
      "stayhomestaysafewashyourhandssocialdistancingflattenthecurve", state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(segment_hashtag_scored(tag, lexicon));
}
BENCHMARK(BM_SegmentHashtag)->Arg(8)->Arg(16)->Arg(32)->Arg(60);

CorpusSplit synthetic_split(std::size_t n) {
  std::mt19937_64 rng(1);
  const char* words[] = {"case", "death", "home", "safe", "news", "lol", "test", "positive",
                         "county", "joke", "mask", "report", "new", "york", "today", "stay"};
  CorpusSplit split;
  for (std::size_t i = 0; i < n; ++i) {
    std::string text;
    for (int k = 0; k < 20; ++k) text += std::string(k ? " " : "") + words[rng() % 16];
    split.examples.push_back({std::to_string(i), text,
                              i % 2 ? Label::kInformative : Label::kUninformative});
  }
  return split;
}

void BM_TrainEpoch(benchmark::State& state) {
  const CorpusSplit data = synthetic_split(static_cast<std::size_t>(state.range(0)));
  ModelConfig config;
  config.epochs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(train(data, config));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TrainEpoch)->Arg(1000)->Arg(7000)->Unit(benchmark::kMillisecond);

void BM_Vote(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<PredictionVector> vectors(7);
  for (std::size_t m = 0; m < 7; ++m) {
    vectors[m].model_id = "m" + std::to_string(m);
    for (int i = 0; i < 2000; ++i) vectors[m].entries.push_back({std::to_string(i), unit(rng)});
  }
  const VoteMode mode = state.range(0) ? VoteMode::kSoft : VoteMode::kHard;
  for (auto _ : state) benchmark::DoNotOptimize(vote(mode, vectors));
  state.SetItemsProcessed(state.iterations() * 2000);
}
BENCHMARK(BM_Vote)->Arg(0)->Arg(1);

}  // namespace

BENCHMARK_MAIN();

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "run_config.hpp"
#include "tweetinfo/classifier.hpp"
#include "tweetinfo/corpus.hpp"
#include "tweetinfo/label.hpp"
#include "tweetinfo/lexicon.hpp"
#include "tweetinfo/metrics.hpp"

namespace tweetinfo::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitData = 2,
  kExitNumeric = 3,
};

// Entry point shared by the tweetinfo executable and the tests. args
// excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

// Building blocks shared by the subcommands and `run`, so that chaining
// subcommands reproduces `run` byte for byte.

// Rows whose text is blank raise DataError.
CorpusSplit normalize_split(const CorpusSplit& split,
                            const NormalizerResources& resources);

// Reorders predictions into split order. Missing or extra ids raise
// DataError.
PredictionVector align_predictions(const PredictionVector& predictions,
                                   const CorpusSplit& split);

std::string render_error_analysis(std::string_view name,
                                  const LabelSequence& predicted,
                                  const CorpusSplit& gold);

struct SummaryRow {
  std::string name;
  EvaluationReport report;
};
std::string render_summary(const std::vector<SummaryRow>& rows);

// Runs the whole experiment and writes into config.output_dir:
//   data/train.tsv, data/eval.tsv     splits as fed to the models
//   models/<id>.model                 trained reference models
//   predictions/<id>.tsv              per-model probabilities
//   labels/<mode>.tsv                 ensemble labels (hard, soft)
//   reports/<name>.txt, <name>.kv     per model and per ensemble mode
//   reports/<mode>_errors.txt         false positive / negative listing
//   reports/summary.txt               one line per model and ensemble
// Reports are produced only when the eval split is labeled.
void run_pipeline(const RunConfig& config, std::ostream& log);

}  // namespace tweetinfo::cli

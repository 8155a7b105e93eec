#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "tweetinfo/ensemble.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/format.hpp"
#include "tweetinfo/normalizer.hpp"

namespace tweetinfo::cli {
namespace {

namespace fs = std::filesystem;

void write_text(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  out << text;
  if (!out) throw DataError("write failed: " + path.string());
}

// Re-throws failures of fn with the stage name prepended, keeping the type
// so the exit code still reflects the failure class.
template <typename Fn>
auto stage(std::string_view name, Fn&& fn) -> decltype(fn()) {
  const std::string prefix = "stage '" + std::string(name) + "': ";
  try {
    return fn();
  } catch (const NumericError& e) {
    throw NumericError(prefix + e.what());
  } catch (const DataError& e) {
    throw DataError(prefix + e.what());
  } catch (const std::invalid_argument& e) {
    throw DataError(prefix + e.what());
  }
}

struct LexiconOptions {
  std::string characters;
  std::string contractions;
  std::string abbreviations;
  std::string segmentation;

  void add_to(CLI::App& app) {
    app.add_option("--characters", characters,
                   "Character replacement table (default: builtin)");
    app.add_option("--contractions", contractions,
                   "Contraction dictionary (default: builtin)");
    app.add_option("--abbreviations", abbreviations,
                   "Abbreviation dictionary (default: builtin)");
    app.add_option("--segmentation", segmentation,
                   "Hashtag segmentation lexicon (default: builtin)");
  }

  LexiconPaths paths() const {
    auto opt = [](const std::string& s) -> std::optional<fs::path> {
      if (s.empty()) return std::nullopt;
      return fs::path(s);
    };
    return {opt(characters), opt(contractions), opt(abbreviations),
            opt(segmentation)};
  }
};

std::vector<std::string> reversed(std::vector<std::string> args) {
  std::reverse(args.begin(), args.end());
  return args;
}

EvaluationReport evaluate_labels(const LabelSequence& predicted,
                                 const CorpusSplit& gold) {
  return report(confusion(predicted, gold_labels(gold)));
}

}  // namespace

CorpusSplit normalize_split(const CorpusSplit& split,
                            const NormalizerResources& resources) {
  CorpusSplit out = split;
  for (LabeledExample& e : out.examples) {
    try {
      e.text = normalize(RawTweet(e.id, e.text), resources).text;
    } catch (const std::invalid_argument& error) {
      throw DataError(error.what());
    }
  }
  return out;
}

PredictionVector align_predictions(const PredictionVector& predictions,
                                   const CorpusSplit& split) {
  std::unordered_map<std::string, double> by_id;
  for (const Prediction& p : predictions.entries) by_id.emplace(p.id, p.probability);
  if (by_id.size() != split.size()) {
    throw DataError("model '" + predictions.model_id + "' has " +
                    std::to_string(by_id.size()) + " predictions for " +
                    std::to_string(split.size()) + " examples");
  }
  PredictionVector aligned{predictions.model_id, {}};
  aligned.entries.reserve(split.size());
  for (const LabeledExample& e : split.examples) {
    const auto it = by_id.find(e.id);
    if (it == by_id.end()) {
      throw DataError("model '" + predictions.model_id +
                      "' has no prediction for id '" + e.id + "'");
    }
    aligned.entries.push_back({e.id, it->second});
  }
  return aligned;
}

std::string render_error_analysis(std::string_view name,
                                  const LabelSequence& predicted,
                                  const CorpusSplit& gold) {
  const LabelSequence gold_seq = gold_labels(gold);
  std::ostringstream out;
  out << name << " error analysis\n";
  for (const ErrorKind kind : {ErrorKind::kFalsePositive, ErrorKind::kFalseNegative}) {
    const auto errors = error_listing(predicted, gold_seq, gold, kind);
    out << (kind == ErrorKind::kFalsePositive
                ? "\nfalse positives (gold UNINFORMATIVE, predicted INFORMATIVE): "
                : "\nfalse negatives (gold INFORMATIVE, predicted UNINFORMATIVE): ")
        << errors.size() << '\n';
    for (const LabeledExample& e : errors) out << e.id << '\t' << e.text << '\n';
  }
  return out.str();
}

std::string render_summary(const std::vector<SummaryRow>& rows) {
  std::size_t width = 5;
  for (const SummaryRow& row : rows) width = std::max(width, row.name.size());
  auto pad = [width](std::string_view s) {
    return std::string(s) + std::string(width - s.size(), ' ');
  };
  std::ostringstream out;
  out << pad("model") << "  P       R       F1      Acc\n";
  for (const SummaryRow& row : rows) {
    out << pad(row.name) << "  " << format_fixed(row.report.precision, 4) << "  "
        << format_fixed(row.report.recall, 4) << "  "
        << format_fixed(row.report.f1, 4) << "  "
        << format_fixed(row.report.accuracy, 4) << '\n';
  }
  return out.str();
}

void run_pipeline(const RunConfig& config, std::ostream& log) {
  stage("config", [&] { config.validate(); });
  const fs::path& root = config.output_dir;
  for (const char* sub : {"data", "models", "predictions", "labels", "reports"}) {
    fs::create_directories(root / sub);
  }

  const bool any_training =
      std::any_of(config.models.begin(), config.models.end(),
                  [](const ModelEntry& m) { return !m.predictions; });

  CorpusSplit eval = stage("load eval", [&] {
    return load_split(config.eval, SplitName::kValidation);
  });
  std::optional<CorpusSplit> train;
  if (any_training) {
    train = stage("load train", [&] {
      return load_split(*config.train, SplitName::kTraining);
    });
  }

  if (config.normalize) {
    stage("normalize", [&] {
      const NormalizerResources resources = config.lexicons.load();
      eval = normalize_split(eval, resources);
      if (train) train = normalize_split(*train, resources);
    });
    log << "normalized " << eval.size() << " eval"
        << (train ? " and " + std::to_string(train->size()) + " train" : "")
        << " examples\n";
  }
  if (train && config.rebalance) {
    stage("rebalance", [&] { train = rebalance(*train, config.rebalance_seed); });
    const SplitStats s = stats(*train);
    log << "rebalanced train to " << s.n_informative << "/" << s.n_uninformative
        << '\n';
  }
  if (train) write_split(root / "data" / "train.tsv", *train);
  write_split(root / "data" / "eval.tsv", eval);

  // Models are independent; train them concurrently and join in order.
  std::vector<std::future<PredictionVector>> pending;
  for (const ModelEntry& entry : config.models) {
    pending.push_back(std::async(std::launch::async, [&, entry] {
      if (entry.predictions) {
        return stage("ingest " + entry.id, [&] {
          return align_predictions(load_predictions(*entry.predictions, entry.id),
                                   eval);
        });
      }
      return stage("train " + entry.id, [&] {
        const ReferenceModel model = tweetinfo::train(*train, entry.config);
        save_model(root / "models" / (entry.id + ".model"), model);
        return predict(model, eval, entry.id);
      });
    }));
  }
  std::vector<PredictionVector> predictions;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    predictions.push_back(pending[i].get());
    const PredictionVector& p = predictions.back();
    write_predictions(root / "predictions" / (p.model_id + ".tsv"), p);
    log << (config.models[i].predictions ? "ingested " : "trained ")
        << p.model_id << '\n';
  }

  std::vector<VoteMode> modes;
  if (config.ensemble != EnsembleMode::kSoft) modes.push_back(VoteMode::kHard);
  if (config.ensemble != EnsembleMode::kHard) modes.push_back(VoteMode::kSoft);
  std::vector<std::pair<std::string, LabelSequence>> ensembles;
  for (const VoteMode mode : modes) {
    const std::string name(vote_mode_name(mode));
    LabelSequence labels = stage("ensemble " + name, [&] {
      return vote(mode, predictions, config.threshold);
    });
    write_labels(root / "labels" / (name + ".tsv"), labels);
    ensembles.emplace_back(name, std::move(labels));
  }

  if (!eval.labeled()) {
    log << "eval split is unlabeled; skipping evaluation\n";
    return;
  }
  std::vector<SummaryRow> rows;
  auto emit = [&](const std::string& name, const LabelSequence& labels) {
    const EvaluationReport r =
        stage("evaluate " + name, [&] { return evaluate_labels(labels, eval); });
    write_text(root / "reports" / (name + ".txt"), render_report(name, r));
    write_text(root / "reports" / (name + ".kv"), render_key_values(r));
    rows.push_back({name, r});
  };
  for (const PredictionVector& p : predictions) {
    emit(p.model_id, soft_vote(std::span(&p, 1), config.threshold));
  }
  for (const auto& [name, labels] : ensembles) {
    emit(name, labels);
    write_text(root / "reports" / (name + "_errors.txt"),
               stage("analyze " + name,
                     [&] { return render_error_analysis(name, labels, eval); }));
  }
  write_text(root / "reports" / "summary.txt", render_summary(rows));
  log << render_summary(rows);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Tweet informativeness toolkit: normalize, train, ensemble, evaluate"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "tweetinfo 0.1.0");

  LexiconOptions lexicons;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;

  // normalize
  CLI::App* normalize_cmd = app.add_subcommand("normalize", "Normalize the text column of a corpus TSV");
  normalize_cmd->add_option("-i,--input", input, "Corpus TSV")->required();
  normalize_cmd->add_option("-o,--output", output, "Normalized corpus TSV")->required();
  lexicons.add_to(*normalize_cmd);

  // stats
  CLI::App* stats_cmd = app.add_subcommand("stats", "Count labels per class");
  stats_cmd->add_option("-i,--input", input, "Labeled corpus TSV")->required();

  // rebalance
  CLI::App* rebalance_cmd = app.add_subcommand("rebalance", "Down-sample the majority class to a 50:50 split");
  rebalance_cmd->add_option("-i,--input", input, "Labeled corpus TSV")->required();
  rebalance_cmd->add_option("-o,--output", output, "Rebalanced corpus TSV")->required();
  rebalance_cmd->add_option("--seed", seed, "Sampling and shuffle seed");

  // train
  ModelConfig model_config;
  int reference_row = 0;
  CLI::App* train_cmd = app.add_subcommand("train", "Train the reference logistic-regression classifier");
  train_cmd->add_option("-i,--input", input, "Labeled training TSV")->required();
  train_cmd->add_option("-o,--output", output, "Model file")->required();
  train_cmd->add_option("--reference-config", reference_row,
                        "Start from reference configuration 1-7")
      ->check(CLI::Range(1, 7));
  train_cmd->add_option("--batch-size", model_config.batch_size);
  train_cmd->add_option("--learning-rate", model_config.learning_rate);
  train_cmd->add_option("--epochs", model_config.epochs);
  train_cmd->add_option("--seed", model_config.seed);
  train_cmd->add_option("--max-tokens", model_config.max_tokens);

  // predict
  std::string model_path;
  std::string model_id;
  CLI::App* predict_cmd = app.add_subcommand("predict", "Write INFORMATIVE probabilities for a corpus");
  predict_cmd->add_option("-m,--model", model_path, "Model file")->required();
  predict_cmd->add_option("-i,--input", input, "Corpus TSV")->required();
  predict_cmd->add_option("-o,--output", output, "Prediction TSV (Id, Prob)")->required();
  predict_cmd->add_option("--model-id", model_id, "Defaults to the model file stem");

  // ingest
  std::string split_path;
  CLI::App* ingest_cmd = app.add_subcommand("ingest", "Validate an external prediction file and align it to a split");
  ingest_cmd->add_option("-i,--input", input, "Prediction TSV (Id, Prob)")->required();
  ingest_cmd->add_option("-s,--split", split_path, "Corpus TSV fixing the id order")->required();
  ingest_cmd->add_option("-o,--output", output, "Aligned prediction TSV")->required();

  // ensemble
  std::vector<std::string> prediction_paths;
  std::string mode_name = "hard";
  double threshold = 0.5;
  CLI::App* ensemble_cmd = app.add_subcommand("ensemble", "Combine prediction files by hard or soft voting");
  ensemble_cmd->add_option("-p,--predictions", prediction_paths, "Prediction TSVs")->required();
  ensemble_cmd->add_option("--mode", mode_name, "hard or soft")
      ->check(CLI::IsMember({"hard", "soft"}));
  ensemble_cmd->add_option("--threshold", threshold)->check(CLI::Range(0.0, 1.0));
  ensemble_cmd->add_option("-o,--output", output, "Label TSV (Id, Label)")->required();

  // evaluate
  std::string predicted_path;
  std::string name;
  std::string kv_path;
  CLI::App* evaluate_cmd = app.add_subcommand("evaluate", "Precision, recall, F1 and accuracy on the INFORMATIVE class");
  evaluate_cmd->add_option("-p,--predicted", predicted_path, "Label TSV")->required();
  evaluate_cmd->add_option("-g,--gold", split_path, "Labeled corpus TSV")->required();
  evaluate_cmd->add_option("--name", name, "Report title (default: label file stem)");
  evaluate_cmd->add_option("-o,--output", output, "Text report (default: stdout)");
  evaluate_cmd->add_option("--kv", kv_path, "Key-value report");

  // analyze
  CLI::App* analyze_cmd = app.add_subcommand("analyze", "List false positives and false negatives");
  analyze_cmd->add_option("-p,--predicted", predicted_path, "Label TSV")->required();
  analyze_cmd->add_option("-g,--gold", split_path, "Labeled corpus TSV")->required();
  analyze_cmd->add_option("--name", name, "Listing title (default: label file stem)");
  analyze_cmd->add_option("-o,--output", output, "Output file (default: stdout)");

  // run
  std::string config_path;
  bool print_default = false;
  std::string output_dir;
  std::string train_override;
  std::string eval_override;
  CLI::App* run_cmd = app.add_subcommand("run", "Run the full experiment from a JSON config");
  run_cmd->add_option("-c,--config", config_path, "Run config JSON");
  run_cmd->add_flag("--print-default-config", print_default,
                    "Print the default config (seven reference models) and exit");
  run_cmd->add_option("--output-dir", output_dir, "Override output_dir");
  run_cmd->add_option("--train", train_override, "Override the train split");
  run_cmd->add_option("--eval", eval_override, "Override the eval split");
  std::optional<std::string> run_mode;
  std::optional<double> run_threshold;
  std::optional<std::uint64_t> run_seed;
  run_cmd->add_option("--ensemble", run_mode, "hard, soft or both")
      ->check(CLI::IsMember({"hard", "soft", "both"}));
  run_cmd->add_option("--threshold", run_threshold)->check(CLI::Range(0.0, 1.0));
  run_cmd->add_option("--rebalance-seed", run_seed);

  try {
    app.parse(reversed(args));
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (normalize_cmd->parsed()) {
      const NormalizerResources resources = lexicons.paths().load();
      const CorpusSplit split = load_split(input, SplitName::kTraining);
      write_split(fs::path(output), normalize_split(split, resources));
    } else if (stats_cmd->parsed()) {
      const SplitStats s = stats(load_split(input, SplitName::kTraining));
      out << "informative\t" << s.n_informative << '\n'
          << "uninformative\t" << s.n_uninformative << '\n'
          << "total\t" << s.total() << '\n';
    } else if (rebalance_cmd->parsed()) {
      write_split(fs::path(output),
                  rebalance(load_split(input, SplitName::kTraining), seed));
    } else if (train_cmd->parsed()) {
      ModelConfig config = model_config;
      if (reference_row > 0) {
        config = reference_model_configs()[static_cast<std::size_t>(reference_row - 1)];
        // Explicit flags still override the reference row.
        if (train_cmd->count("--batch-size")) config.batch_size = model_config.batch_size;
        if (train_cmd->count("--learning-rate")) config.learning_rate = model_config.learning_rate;
        if (train_cmd->count("--epochs")) config.epochs = model_config.epochs;
        if (train_cmd->count("--seed")) config.seed = model_config.seed;
        if (train_cmd->count("--max-tokens")) config.max_tokens = model_config.max_tokens;
      }
      try {
        config.validate();
      } catch (const std::invalid_argument& e) {
        err << "train: " << e.what() << '\n';
        return kExitUsage;
      }
      const ReferenceModel model =
          tweetinfo::train(load_split(input, SplitName::kTraining), config);
      save_model(fs::path(output), model);
    } else if (predict_cmd->parsed()) {
      const fs::path path(model_path);
      const ReferenceModel model = load_model(path);
      write_predictions(fs::path(output),
                        predict(model, load_split(input, SplitName::kValidation),
                                model_id.empty() ? path.stem().string() : model_id));
    } else if (ingest_cmd->parsed()) {
      const CorpusSplit split = load_split(split_path, SplitName::kValidation);
      write_predictions(fs::path(output),
                        align_predictions(load_predictions(input), split));
    } else if (ensemble_cmd->parsed()) {
      std::vector<PredictionVector> vectors;
      for (const std::string& p : prediction_paths) vectors.push_back(load_predictions(p));
      const VoteMode mode = mode_name == "soft" ? VoteMode::kSoft : VoteMode::kHard;
      write_labels(fs::path(output), vote(mode, vectors, threshold));
    } else if (evaluate_cmd->parsed()) {
      const fs::path path(predicted_path);
      const std::string title = name.empty() ? path.stem().string() : name;
      const EvaluationReport r = evaluate_labels(
          load_labels(path), load_split(split_path, SplitName::kValidation));
      if (output.empty()) {
        out << render_report(title, r);
      } else {
        write_text(output, render_report(title, r));
      }
      if (!kv_path.empty()) write_text(kv_path, render_key_values(r));
    } else if (analyze_cmd->parsed()) {
      const fs::path path(predicted_path);
      const std::string title = name.empty() ? path.stem().string() : name;
      const std::string text = render_error_analysis(
          title, load_labels(path), load_split(split_path, SplitName::kValidation));
      if (output.empty()) {
        out << text;
      } else {
        write_text(output, text);
      }
    } else if (run_cmd->parsed()) {
      if (print_default) {
        RunConfig defaults;
        defaults.train = "train.tsv";
        defaults.eval = "valid.tsv";
        defaults.models = reference_model_entries();
        out << to_json(defaults).dump(2) << '\n';
        return kExitOk;
      }
      if (config_path.empty() && eval_override.empty()) {
        err << "run: --config or --eval is required\n";
        return kExitUsage;
      }
      RunConfig config;
      if (!config_path.empty()) {
        config = load_run_config(config_path);
      } else {
        config.models = reference_model_entries();
      }
      if (!output_dir.empty()) config.output_dir = output_dir;
      if (!train_override.empty()) config.train = fs::path(train_override);
      if (!eval_override.empty()) config.eval = eval_override;
      if (run_mode) {
        config.ensemble = *run_mode == "hard"   ? EnsembleMode::kHard
                          : *run_mode == "soft" ? EnsembleMode::kSoft
                                                : EnsembleMode::kBoth;
      }
      if (run_threshold) config.threshold = *run_threshold;
      if (run_seed) config.rebalance_seed = *run_seed;
      run_pipeline(config, out);
    }
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace tweetinfo::cli

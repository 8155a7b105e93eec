#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "tweetinfo/classifier.hpp"
#include "tweetinfo/lexicon.hpp"

namespace tweetinfo::cli {

enum class EnsembleMode { kHard, kSoft, kBoth };

struct ModelEntry {
  std::string id;
  ModelConfig config;
  // When set, predictions are ingested from this file instead of training.
  std::optional<std::filesystem::path> predictions;
};

struct LexiconPaths {
  std::optional<std::filesystem::path> characters;
  std::optional<std::filesystem::path> contractions;
  std::optional<std::filesystem::path> abbreviations;
  std::optional<std::filesystem::path> segmentation;

  // Builtin data for every unset path.
  NormalizerResources load() const;
};

/// Schema (JSON object; every key optional unless noted):
///
///   "train":          training split TSV (needed when any model trains)
///   "eval":           evaluation split TSV (required)
///   "output_dir":     defaults to "run"
///   "lexicons":       {"characters", "contractions", "abbreviations",
///                      "segmentation"}: paths overriding builtin data
///   "normalize":      bool, default true
///   "rebalance":      bool, default true
///   "rebalance_seed": non-negative integer, default 0
///   "ensemble":       "hard" | "soft" | "both", default "both"
///   "threshold":      number in [0, 1], default 0.5
///   "models":         array of {"id", "batch_size", "learning_rate",
///                     "epochs", "seed", "max_tokens", "predictions"};
///                     defaults to the seven reference configurations
///
/// Relative paths resolve against the config file's directory.
struct RunConfig {
  std::optional<std::filesystem::path> train;
  std::filesystem::path eval;
  std::filesystem::path output_dir = "run";
  LexiconPaths lexicons;
  bool normalize = true;
  bool rebalance = true;
  std::uint64_t rebalance_seed = 0;
  EnsembleMode ensemble = EnsembleMode::kBoth;
  double threshold = 0.5;
  std::vector<ModelEntry> models;

  // Throws std::invalid_argument describing the first problem found.
  void validate() const;
};

std::vector<ModelEntry> reference_model_entries();

RunConfig parse_run_config(const nlohmann::json& json,
                           const std::filesystem::path& base_dir);
RunConfig load_run_config(const std::filesystem::path& path);
nlohmann::json to_json(const RunConfig& config);

}  // namespace tweetinfo::cli

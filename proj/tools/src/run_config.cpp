#include "run_config.hpp"

#include <fstream>
#include <stdexcept>

#include "tweetinfo/error.hpp"

namespace tweetinfo::cli {
namespace {

using nlohmann::json;

std::filesystem::path resolve(const std::filesystem::path& base,
                              const std::string& value) {
  const std::filesystem::path p(value);
  return p.is_absolute() || base.empty() ? p : base / p;
}

template <typename T>
T get_or(const json& object, const char* key, T fallback) {
  if (!object.contains(key)) return fallback;
  return object.at(key).get<T>();
}

}  // namespace

NormalizerResources LexiconPaths::load() const {
  NormalizerResources resources = NormalizerResources::builtin();
  if (characters) resources.characters = CharacterTable::load(*characters);
  if (contractions) {
    resources.contractions = ExpansionDictionary::load(*contractions);
  }
  if (abbreviations) {
    resources.abbreviations = ExpansionDictionary::load(*abbreviations);
  }
  if (segmentation) {
    resources.segmentation = SegmentationLexicon::load(*segmentation);
  }
  return resources;
}

void RunConfig::validate() const {
  if (eval.empty()) throw std::invalid_argument("\"eval\" split is required");
  if (models.empty()) throw std::invalid_argument("at least one model is required");
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0, 1]");
  }
  std::vector<std::string> ids;
  for (const ModelEntry& m : models) {
    if (m.id.empty() || m.id.find_first_of("/\\") != std::string::npos) {
      throw std::invalid_argument("model id '" + m.id +
                                  "' must be non-empty without path separators");
    }
    for (const std::string& seen : ids) {
      if (seen == m.id) throw std::invalid_argument("duplicate model id '" + m.id + "'");
    }
    ids.push_back(m.id);
    if (!m.predictions) {
      m.config.validate();
      if (!train) {
        throw std::invalid_argument("model '" + m.id +
                                    "' needs a \"train\" split or a predictions file");
      }
    }
  }
}

std::vector<ModelEntry> reference_model_entries() {
  std::vector<ModelEntry> entries;
  const auto configs = reference_model_configs();
  for (std::size_t i = 0; i < configs.size(); ++i) {
    entries.push_back({"model" + std::to_string(i + 1), configs[i], std::nullopt});
  }
  return entries;
}

RunConfig parse_run_config(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw DataError("run config must be a JSON object");
  RunConfig config;
  try {
    if (j.contains("train")) config.train = resolve(base_dir, j.at("train").get<std::string>());
    if (j.contains("eval")) config.eval = resolve(base_dir, j.at("eval").get<std::string>());
    config.output_dir =
        resolve(base_dir, get_or<std::string>(j, "output_dir", "run"));
    if (j.contains("lexicons")) {
      const json& lex = j.at("lexicons");
      auto path_of = [&](const char* key) -> std::optional<std::filesystem::path> {
        if (!lex.contains(key)) return std::nullopt;
        return resolve(base_dir, lex.at(key).get<std::string>());
      };
      config.lexicons = {path_of("characters"), path_of("contractions"),
                         path_of("abbreviations"), path_of("segmentation")};
    }
    config.normalize = get_or(j, "normalize", true);
    config.rebalance = get_or(j, "rebalance", true);
    config.rebalance_seed = get_or<std::uint64_t>(j, "rebalance_seed", 0);
    config.threshold = get_or(j, "threshold", 0.5);
    const std::string mode = get_or<std::string>(j, "ensemble", "both");
    if (mode == "hard") {
      config.ensemble = EnsembleMode::kHard;
    } else if (mode == "soft") {
      config.ensemble = EnsembleMode::kSoft;
    } else if (mode == "both") {
      config.ensemble = EnsembleMode::kBoth;
    } else {
      throw DataError("\"ensemble\" must be hard, soft or both, got '" + mode + "'");
    }
    if (j.contains("models")) {
      const ModelConfig defaults;
      std::size_t index = 0;
      for (const json& m : j.at("models")) {
        ++index;
        ModelEntry entry;
        entry.id = get_or<std::string>(m, "id", "model" + std::to_string(index));
        entry.config.batch_size = get_or(m, "batch_size", defaults.batch_size);
        entry.config.learning_rate = get_or(m, "learning_rate", defaults.learning_rate);
        entry.config.epochs = get_or(m, "epochs", defaults.epochs);
        entry.config.seed = get_or<std::uint64_t>(m, "seed", defaults.seed);
        entry.config.max_tokens = get_or(m, "max_tokens", defaults.max_tokens);
        if (m.contains("predictions")) {
          entry.predictions = resolve(base_dir, m.at("predictions").get<std::string>());
        }
        config.models.push_back(std::move(entry));
      }
    } else {
      config.models = reference_model_entries();
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("run config: ") + e.what());
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DataError(path.string() + ": " + e.what());
  }
  return parse_run_config(j, path.parent_path());
}

json to_json(const RunConfig& config) {
  json j;
  if (config.train) j["train"] = config.train->string();
  j["eval"] = config.eval.string();
  j["output_dir"] = config.output_dir.string();
  json lex = json::object();
  if (config.lexicons.characters) lex["characters"] = config.lexicons.characters->string();
  if (config.lexicons.contractions) lex["contractions"] = config.lexicons.contractions->string();
  if (config.lexicons.abbreviations) lex["abbreviations"] = config.lexicons.abbreviations->string();
  if (config.lexicons.segmentation) lex["segmentation"] = config.lexicons.segmentation->string();
  if (!lex.empty()) j["lexicons"] = lex;
  j["normalize"] = config.normalize;
  j["rebalance"] = config.rebalance;
  j["rebalance_seed"] = config.rebalance_seed;
  j["ensemble"] = config.ensemble == EnsembleMode::kHard   ? "hard"
                  : config.ensemble == EnsembleMode::kSoft ? "soft"
                                                           : "both";
  j["threshold"] = config.threshold;
  json models = json::array();
  for (const ModelEntry& m : config.models) {
    json entry{{"id", m.id},
               {"batch_size", m.config.batch_size},
               {"learning_rate", m.config.learning_rate},
               {"epochs", m.config.epochs},
               {"seed", m.config.seed},
               {"max_tokens", m.config.max_tokens}};
    if (m.predictions) entry["predictions"] = m.predictions->string();
    models.push_back(std::move(entry));
  }
  j["models"] = std::move(models);
  return j;
}

}  // namespace tweetinfo::cli

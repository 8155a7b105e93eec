#include "tweetinfo/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include "text_util.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/random.hpp"

namespace tweetinfo {
namespace {

constexpr std::string_view kLabeledHeader = "Id\tText\tLabel";
constexpr std::string_view kUnlabeledHeader = "Id\tText";

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line) + ": ";
}

}  // namespace

std::string_view split_name(SplitName name) {
  switch (name) {
    case SplitName::kTraining:
      return "training";
    case SplitName::kValidation:
      return "validation";
    case SplitName::kTest:
      return "test";
  }
  return "unknown";
}

bool CorpusSplit::labeled() const {
  return std::all_of(examples.begin(), examples.end(),
                     [](const LabeledExample& e) { return e.label.has_value(); });
}

CorpusSplit parse_split(std::istream& in, SplitName name,
                        std::string_view source) {
  CorpusSplit split;
  split.name = name;

  std::string line;
  if (!detail::read_line(in, line)) {
    throw DataError(std::string(source) + ": missing header line");
  }
  bool has_label = false;
  if (line == kLabeledHeader) {
    has_label = true;
  } else if (line != kUnlabeledHeader) {
    throw DataError(where(source, 1) + "expected header '" +
                    std::string(kLabeledHeader) + "' or '" +
                    std::string(kUnlabeledHeader) + "'");
  }
  const std::size_t columns = has_label ? 3 : 2;

  std::unordered_set<std::string> seen;
  std::size_t line_number = 1;
  while (detail::read_line(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    const auto fields = detail::split_tabs(line);
    if (fields.size() != columns) {
      throw DataError(where(source, line_number) + "expected " +
                      std::to_string(columns) + " columns, found " +
                      std::to_string(fields.size()));
    }
    LabeledExample example{std::string(fields[0]), std::string(fields[1]),
                           std::nullopt};
    if (has_label) {
      example.label = parse_label(fields[2]);
      if (!example.label) {
        throw DataError(where(source, line_number) + "unknown label '" +
                        std::string(fields[2]) + "'");
      }
    }
    if (!seen.insert(example.id).second) {
      throw DataError(where(source, line_number) + "duplicate id '" +
                      example.id + "'");
    }
    split.examples.push_back(std::move(example));
  }
  return split;
}

CorpusSplit load_split(const std::filesystem::path& path, SplitName name) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  return parse_split(in, name, path.string());
}

void write_split(std::ostream& out, const CorpusSplit& split) {
  const bool any_label = std::any_of(
      split.examples.begin(), split.examples.end(),
      [](const LabeledExample& e) { return e.label.has_value(); });
  if (any_label && !split.labeled()) {
    throw DataError("cannot write a split mixing labeled and unlabeled rows");
  }
  // An empty split has nothing to say; default to the labeled layout.
  const bool labeled_header = any_label || split.examples.empty();
  out << (labeled_header ? kLabeledHeader : kUnlabeledHeader) << '\n';
  for (const LabeledExample& e : split.examples) {
    if (e.text.find_first_of("\t\n") != std::string::npos ||
        e.id.find_first_of("\t\n") != std::string::npos) {
      throw DataError("example '" + e.id + "' contains a tab or newline");
    }
    out << e.id << '\t' << e.text;
    if (e.label) out << '\t' << label_name(*e.label);
    out << '\n';
  }
}

void write_split(const std::filesystem::path& path, const CorpusSplit& split) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  write_split(out, split);
  if (!out) throw DataError("write failed: " + path.string());
}

SplitStats stats(const CorpusSplit& split) {
  SplitStats result;
  for (const LabeledExample& e : split.examples) {
    if (!e.label) throw DataError("example '" + e.id + "' has no label");
    if (*e.label == Label::kInformative) {
      ++result.n_informative;
    } else {
      ++result.n_uninformative;
    }
  }
  return result;
}

LabelSequence gold_labels(const CorpusSplit& split) {
  LabelSequence labels;
  labels.reserve(split.size());
  for (const LabeledExample& e : split.examples) {
    if (!e.label) throw DataError("example '" + e.id + "' has no label");
    labels.push_back({e.id, *e.label});
  }
  return labels;
}

CorpusSplit rebalance(const CorpusSplit& split, std::uint64_t seed) {
  std::vector<std::size_t> informative;
  std::vector<std::size_t> uninformative;
  for (std::size_t i = 0; i < split.size(); ++i) {
    const auto& label = split.examples[i].label;
    if (!label) {
      throw DataError("example '" + split.examples[i].id + "' has no label");
    }
    (*label == Label::kInformative ? informative : uninformative).push_back(i);
  }
  if (informative.empty() || uninformative.empty()) {
    throw DataError("rebalance needs both classes present");
  }

  auto& majority =
      informative.size() > uninformative.size() ? informative : uninformative;
  const auto& minority =
      &majority == &informative ? uninformative : informative;

  Rng rng(seed);
  rng.shuffle(std::span<std::size_t>(majority));
  majority.resize(minority.size());

  std::vector<std::size_t> kept(minority.begin(), minority.end());
  kept.insert(kept.end(), majority.begin(), majority.end());
  std::sort(kept.begin(), kept.end());
  rng.shuffle(std::span<std::size_t>(kept));

  CorpusSplit out;
  out.name = split.name;
  out.examples.reserve(kept.size());
  for (const std::size_t i : kept) out.examples.push_back(split.examples[i]);
  return out;
}

}  // namespace tweetinfo

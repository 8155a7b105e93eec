#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tweetinfo {

// 0 and 1 follow the shared-task convention; INFORMATIVE is the positive class.
enum class Label : int { kUninformative = 0, kInformative = 1 };

std::string_view label_name(Label label);
std::optional<Label> parse_label(std::string_view name);

struct LabeledId {
  std::string id;
  Label label;

  friend bool operator==(const LabeledId&, const LabeledId&) = default;
};

using LabelSequence = std::vector<LabeledId>;

}  // namespace tweetinfo

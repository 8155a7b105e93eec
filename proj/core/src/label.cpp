#include "tweetinfo/label.hpp"

namespace tweetinfo {

std::string_view label_name(Label label) {
  return label == Label::kInformative ? "INFORMATIVE" : "UNINFORMATIVE";
}

std::optional<Label> parse_label(std::string_view name) {
  if (name == "INFORMATIVE") return Label::kInformative;
  if (name == "UNINFORMATIVE") return Label::kUninformative;
  return std::nullopt;
}

}  // namespace tweetinfo

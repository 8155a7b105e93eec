#pragma once

#include <string_view>

// Contents of core/data/*.tsv, embedded at build time.
namespace tweetinfo::detail {

std::string_view builtin_char_replacements();
std::string_view builtin_contractions();
std::string_view builtin_abbreviations();
std::string_view builtin_segmentation_lexicon();

}  // namespace tweetinfo::detail

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace corg {

/// Lowercase, drop punctuation, collapse whitespace runs to single spaces.
/// Normalized equality is the string comparison used for surfaces,
/// descriptors, and answers everywhere in the pipeline.
std::string normalize_text(std::string_view text);

/// normalize_text followed by a whitespace split; empty input gives {}.
std::vector<std::string> normalize_tokens(std::string_view text);

std::size_t token_count(std::string_view text);

bool normalized_equal(std::string_view a, std::string_view b);

/// True when needle's normalized tokens occur as a contiguous run inside
/// haystack's normalized tokens. Empty needles match nothing.
bool contains_token_subsequence(std::string_view haystack,
                                std::string_view needle);

}  // namespace corg

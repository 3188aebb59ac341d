#include "corg/text.hpp"

#include <algorithm>
#include <cctype>

namespace corg {

std::string normalize_text(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char ch : text) {
    if (std::isalnum(ch)) {
      if (pending_space && !out.empty()) {
        out.push_back(' ');
      }
      pending_space = false;
      out.push_back(static_cast<char>(std::tolower(ch)));
    } else {
      // Punctuation and whitespace both act as separators.
      pending_space = true;
    }
  }
  return out;
}

std::vector<std::string> normalize_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  const std::string normalized = normalize_text(text);
  std::size_t start = 0;
  while (start < normalized.size()) {
    std::size_t end = normalized.find(' ', start);
    if (end == std::string::npos) {
      end = normalized.size();
    }
    if (end > start) {
      tokens.emplace_back(normalized.substr(start, end - start));
    }
    start = end + 1;
  }
  return tokens;
}

std::size_t token_count(std::string_view text) {
  return normalize_tokens(text).size();
}

bool normalized_equal(std::string_view a, std::string_view b) {
  return normalize_text(a) == normalize_text(b);
}

bool contains_token_subsequence(std::string_view haystack,
                                std::string_view needle) {
  const std::vector<std::string> hay = normalize_tokens(haystack);
  const std::vector<std::string> sub = normalize_tokens(needle);
  if (sub.empty() || sub.size() > hay.size()) {
    return false;
  }
  return std::search(hay.begin(), hay.end(), sub.begin(), sub.end()) !=
         hay.end();
}

}  // namespace corg

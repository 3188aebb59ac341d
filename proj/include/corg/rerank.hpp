#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "corg/types.hpp"

namespace corg {

struct RerankConfig {
  std::uint64_t seed = 0;
  /// Word -> plural form, consulted before the suffix rules.
  std::map<std::string, std::string> plural_overrides;
};

/// Pluralizes the final alphabetic word before the trailing "?" using the
/// override map, then suffix rules (ss/x/z/ch/sh -> +es, trailing s kept,
/// consonant+y -> ies, otherwise +s). The rest of the question is untouched.
std::string pluralize_question(
    const std::string& question,
    const std::map<std::string, std::string>& overrides = {});

/// Turns a fully connected relation graph into ordered groups:
///   1. collapse duplicate classes to one seeded-random survivor,
///   2. drop bare contexts interchangeable with a surviving described one,
///   3. separate each counterfactual clique across distinct groups (group
///      count = largest clique; members fill the currently smallest
///      groups so sizes never spread by more than one),
///   4. distribute the rest evenly,
///   5. pluralize the question for multi-context groups.
GroupPlan plan_groups(const ContextGraph& graph,
                      const std::vector<ParsedContext>& contexts,
                      const Question& question, const RerankConfig& config);

}  // namespace corg

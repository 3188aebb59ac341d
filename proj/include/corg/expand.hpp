#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corg/llm.hpp"
#include "corg/types.hpp"

namespace corg {

struct ExpandOptions {
  std::uint64_t seed = 0;
  int retry_cap = 3;
  /// Also ask the model to answer each sub-question from the generated
  /// context and require the target answer in its reply.
  bool answer_check = false;
  bool add_counterfactual = true;
  bool add_duplicated = true;
  bool add_ambiguous = true;
};

struct ExpandIssue {
  std::string record_id;
  std::string target;  // the (question, answer) pair that kept failing
  std::string detail;
};

struct ExpandResult {
  std::vector<CorpusRecord> records;
  std::vector<ExpandIssue> issues;
};

/// Grows each record with generated contexts: counterfactual ones pair a
/// seed-picked sub-question with the other answers, duplicated ones pair
/// each sub-question with its own answer, ambiguous ones pair the bare
/// question with each answer. Generated text must contain the target
/// answer verbatim; failures regenerate with the issue appended until the
/// retry cap, after which the target is recorded as an issue and the
/// record keeps its original contexts.
ExpandResult expand_corpus(const std::vector<CorpusRecord>& records,
                           LlmClient& client, const ExpandOptions& options);

}  // namespace corg

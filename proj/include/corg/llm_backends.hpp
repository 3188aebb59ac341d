#pragma once

#include <string>
#include <vector>

#include "corg/aggregate.hpp"
#include "corg/llm.hpp"
#include "corg/oracle.hpp"
#include "corg/types.hpp"

namespace corg {

/// Classification prompt: triple-extraction primer, the five relation
/// definitions, the numbered contexts, and the question.
std::string relation_prompt(const ParsedContext& pivot,
                            const std::vector<ParsedContext>& others,
                            const Question& question);

/// Parses "ContextK - <Label>" lines for K = 2 .. expected+1. Unknown
/// labels and count mismatches raise ParseError quoting the raw reply.
std::vector<Relation> parse_relation_reply(const std::string& reply,
                                           std::size_t expected);

/// One relation per entry of `others`, classified in a single completion.
std::vector<Relation> llm_classify(const ParsedContext& pivot,
                                   const std::vector<ParsedContext>& others,
                                   const Question& question, LlmClient& client);

/// RelationOracle that asks the model per pair.
class LlmRelationOracle final : public RelationOracle {
 public:
  explicit LlmRelationOracle(LlmClient& client) : client_(client) {}

  Relation classify(const ParsedContext& pivot, const ParsedContext& other,
                    const Question& question) override;

 private:
  LlmClient& client_;
};

/// Generator that sends the rendered group prompt to the model.
class LlmGenerator final : public Generator {
 public:
  explicit LlmGenerator(LlmClient& client) : client_(client) {}

  std::string generate(const std::string& question_form,
                       const std::vector<ParsedContext>& contexts) override;

 private:
  LlmClient& client_;
};

/// Few-shot prompt asking for a 6-7 sentence evidence context for a
/// (question, answer) pair. `issues` holds feedback from failed filter
/// checks and is appended for regeneration attempts.
std::string context_generation_prompt(const std::string& question,
                                      const std::string& answer,
                                      const std::vector<std::string>& issues);

/// Few-shot prompt asking for one detailed question per answer, returned
/// "//"-separated.
std::string sub_question_prompt(const std::string& question,
                                const std::vector<std::string>& answers);

std::vector<std::string> parse_sub_question_reply(const std::string& reply,
                                                  std::size_t expected);

}  // namespace corg

#include "corg/expand.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "corg/eval.hpp"
#include "corg/llm_backends.hpp"
#include "corg/text.hpp"

namespace corg {

namespace {

struct Target {
  std::string prompt_question;
  std::string answer;
  std::optional<std::string> descriptor;
};

std::optional<std::string> generate_checked(const Target& target,
                                            LlmClient& client,
                                            const ExpandOptions& options,
                                            std::string& failure_detail) {
  std::vector<std::string> issues;
  for (int attempt = 0; attempt <= options.retry_cap; ++attempt) {
    const std::string body = client.complete(
        {{"user", context_generation_prompt(target.prompt_question,
                                            target.answer, issues)}});
    if (!contains_token_subsequence(body, target.answer)) {
      issues.push_back("the context must contain the exact answer \"" +
                       target.answer + "\"");
      failure_detail = "generated context does not contain the answer";
      continue;
    }
    if (options.answer_check) {
      const std::string reply = client.complete(
          {{"user", "Context: " + body + "\nQuestion: " +
                        target.prompt_question +
                        "\nAnswer with the exact phrase from the context."}});
      if (!contains_token_subsequence(reply, target.answer)) {
        issues.push_back(
            "a reader of the context answered the question with something "
            "other than \"" +
            target.answer + "\"");
        failure_detail = "model did not recover the answer from the context";
        continue;
      }
    }
    return body;
  }
  return std::nullopt;
}

}  // namespace

ExpandResult expand_corpus(const std::vector<CorpusRecord>& records,
                           LlmClient& client, const ExpandOptions& options) {
  ExpandResult result;
  result.records = records;
  std::mt19937_64 rng(options.seed);

  for (CorpusRecord& record : result.records) {
    const auto& subs = record.question.sub_questions;
    if (subs.empty()) {
      continue;
    }

    std::vector<Target> targets;
    if (options.add_counterfactual && subs.size() > 1) {
      const std::size_t pivot =
          std::uniform_int_distribution<std::size_t>(0, subs.size() - 1)(rng);
      const std::string pivot_question =
          sub_question_text(record.question, subs[pivot]);
      for (std::size_t j = 0; j < subs.size(); ++j) {
        if (j == pivot) {
          continue;
        }
        for (const std::string& answer : subs[j].answers) {
          targets.push_back({pivot_question, answer, subs[pivot].descriptor});
        }
      }
    }
    if (options.add_duplicated) {
      for (const SubQuestion& sq : subs) {
        for (const std::string& answer : sq.answers) {
          targets.push_back(
              {sub_question_text(record.question, sq), answer, sq.descriptor});
        }
      }
    }
    if (options.add_ambiguous) {
      for (const SubQuestion& sq : subs) {
        for (const std::string& answer : sq.answers) {
          targets.push_back({record.question.text, answer, std::nullopt});
        }
      }
    }

    auto fresh_id = [&record](std::size_t& counter) {
      std::string id;
      do {
        id = "g" + std::to_string(counter++);
      } while (std::any_of(record.contexts.begin(), record.contexts.end(),
                           [&id](const ParsedContext& c) { return c.id == id; }));
      return id;
    };

    std::size_t generated_index = 0;
    for (const Target& target : targets) {
      std::string failure_detail;
      const std::optional<std::string> body =
          generate_checked(target, client, options, failure_detail);
      if (!body) {
        result.issues.push_back({record.id,
                                 target.prompt_question + " -> " + target.answer,
                                 failure_detail});
        continue;
      }
      ParsedContext ctx;
      ctx.id = fresh_id(generated_index);
      ctx.title = target.descriptor
                      ? record.question.entity + " (" + *target.descriptor + ")"
                      : record.question.entity;
      ctx.body = *body;
      ctx.surface = record.question.entity;
      ctx.descriptor = target.descriptor;
      ctx.answer = target.answer;
      record.contexts.push_back(std::move(ctx));
    }
  }
  return result;
}

}  // namespace corg

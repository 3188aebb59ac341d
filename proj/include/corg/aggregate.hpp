#pragma once

#include <string>
#include <vector>

#include "corg/graph.hpp"
#include "corg/rerank.hpp"
#include "corg/types.hpp"

namespace corg {

/// Produces the raw answer text for one group of contexts.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual std::string generate(const std::string& question_form,
                               const std::vector<ParsedContext>& contexts) = 0;
};

/// Perfect-extraction generator for tests and offline runs: one line per
/// context, "descriptor: answer [k]", straight from the parsed triple.
class MockGenerator final : public Generator {
 public:
  std::string generate(const std::string& question_form,
                       const std::vector<ParsedContext>& contexts) override;
};

/// Numbered contexts, the question, and a cite-your-sources instruction.
std::string render_prompt(const std::string& question_form,
                          const std::vector<ParsedContext>& contexts);

/// One parsed line of generator output. Bracket groups are stripped from
/// the text; purely numeric ones are citation indices.
struct ResponseLine {
  std::optional<std::string> descriptor;
  std::string answer;
  std::vector<std::size_t> citation_indices;  // 1-based
};

std::vector<ResponseLine> parse_response_lines(const std::string& text);

/// Runs the generator on one group and maps "[k]" citations back to
/// context ids. Citation indices outside [1, group size] are an error.
std::vector<ResponseEntry> generate_group(
    const std::vector<ParsedContext>& group, const std::string& question_form,
    Generator& generator);

/// Concatenates per-group entries in group order, merging entries with the
/// same normalized (answer, descriptor) by unioning their citations.
AggregateResponse merge_responses(
    const std::vector<std::vector<ResponseEntry>>& per_group);

std::string render_entries(const std::vector<ResponseEntry>& entries);

struct PipelineConfig {
  BuilderMode mode = BuilderMode::Sound;
  RerankConfig rerank;
};

struct PipelineResult {
  AggregateResponse response;
  RunTrace trace;
  GroupPlan plan;
  ContextGraph graph;
};

/// Contexts relevant to the record's question, answers present, input order.
std::vector<ParsedContext> relevant_contexts(const CorpusRecord& record);

/// Graph -> plan -> per-group generation -> merged, cited response.
PipelineResult run_pipeline(const CorpusRecord& record, RelationOracle& oracle,
                            Generator& generator,
                            const PipelineConfig& config = {});

/// Generation and merging for an existing plan; fills trace.runs and
/// trace.groups but leaves trace.oracle_calls untouched.
std::pair<AggregateResponse, RunTrace> execute_plan(
    const GroupPlan& plan, const std::vector<ParsedContext>& contexts,
    Generator& generator);

}  // namespace corg

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "corg/aggregate.hpp"
#include "corg/eval.hpp"
#include "corg/types.hpp"

namespace corg {

enum class MethodId {
  Base,
  Retrieve,
  Summarize,
  Random,
  KMeans,
  COrg,
  Separate,
};

std::string_view to_string(MethodId method);
MethodId method_from_string(std::string_view name);

class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<double> embed(const std::string& text) = 0;
};

class Ranker {
 public:
  virtual ~Ranker() = default;
  virtual std::vector<std::string> rank(
      const Question& question, const std::vector<ParsedContext>& contexts) = 0;
};

class Summarizer {
 public:
  virtual ~Summarizer() = default;
  virtual std::string summarize(const std::vector<ParsedContext>& contexts) = 0;
};

/// Hashed character trigram counts, L2-normalized, fixed dimension.
class HashedNgramEmbedder final : public Embedder {
 public:
  explicit HashedNgramEmbedder(std::size_t dimensions = 64);
  std::vector<double> embed(const std::string& text) override;

 private:
  std::size_t dimensions_;
};

/// Context ids in ascending order.
class IdOrderRanker final : public Ranker {
 public:
  std::vector<std::string> rank(
      const Question& question,
      const std::vector<ParsedContext>& contexts) override;
};

/// First sentence of every context, concatenated.
class LeadingSentenceSummarizer final : public Summarizer {
 public:
  std::string summarize(const std::vector<ParsedContext>& contexts) override;
};

struct Providers {
  Embedder* embedder = nullptr;
  Ranker* ranker = nullptr;
  Summarizer* summarizer = nullptr;
};

struct BaselineConfig {
  BuilderMode mode = BuilderMode::Sound;
  RerankConfig rerank;
  std::size_t retrieve_top_k = 5;
};

/// Seeded k-means over unit vectors with cosine distance, farthest-first
/// initialization, and a fixed iteration cap; empty clusters are refilled
/// with the point farthest from its centroid.
std::vector<std::size_t> kmeans_assign(
    const std::vector<std::vector<double>>& points, std::size_t clusters,
    std::uint64_t seed, std::size_t max_iterations = 50);

/// Runs one record through a context-handling strategy. Random and KMeans
/// reuse the planner's group count so only the grouping policy differs.
PipelineResult run_baseline(MethodId method, const CorpusRecord& record,
                            RelationOracle& oracle, Generator& generator,
                            const Providers& providers,
                            const BaselineConfig& config);

struct BenchRow {
  MethodId method = MethodId::Base;
  MetricRow metrics;
  double mean_input_tokens = 0.0;
  double mean_output_tokens = 0.0;
  double mean_runs = 0.0;
};

std::vector<BenchRow> compare_methods(const std::vector<CorpusRecord>& records,
                                      const std::vector<MethodId>& methods,
                                      RelationOracle& oracle,
                                      Generator& generator,
                                      const Providers& providers,
                                      const BaselineConfig& config,
                                      QAExtractor& extractor);

}  // namespace corg

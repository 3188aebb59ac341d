#include <doctest.h>

#include <set>

#include "corg/baselines.hpp"
#include "corg/oracle.hpp"
#include "corg/synth.hpp"

using namespace corg;

namespace {

CorpusRecord sample_record(std::uint64_t seed) {
  SynthSpec spec;
  spec.seed = seed;
  spec.descriptors_per_entity = 2;
  spec.conflicts_per_descriptor = 2;
  spec.duplicates_per_context = 1;
  spec.ambiguous_fraction = 0.5;
  spec.none_fraction = 0.25;
  return synth_corpus(spec)[0];
}

struct Runner {
  RuleOracle oracle;
  MockGenerator generator;
  HashedNgramEmbedder embedder;
  IdOrderRanker ranker;
  LeadingSentenceSummarizer summarizer;
  Providers providers{&embedder, &ranker, &summarizer};
  BaselineConfig config;

  PipelineResult run(MethodId method, const CorpusRecord& record) {
    return run_baseline(method, record, oracle, generator, providers, config);
  }
};

}  // namespace

TEST_CASE("base runs once over everything, separate once per context") {
  const CorpusRecord record = sample_record(1);
  Runner runner;

  const PipelineResult base = runner.run(MethodId::Base, record);
  CHECK(base.trace.runs.size() == 1);
  CHECK(base.plan.groups.size() == 1);
  CHECK(base.plan.groups[0].size() == record.contexts.size());

  const PipelineResult separate = runner.run(MethodId::Separate, record);
  CHECK(separate.trace.runs.size() == record.contexts.size());
  for (const auto& group : separate.plan.groups) {
    CHECK(group.size() == 1);
  }
}

TEST_CASE("random partitions into the planner's group count") {
  const CorpusRecord record = sample_record(2);
  Runner runner;

  const PipelineResult reference = runner.run(MethodId::COrg, record);
  const PipelineResult random = runner.run(MethodId::Random, record);
  CHECK(random.plan.groups.size() == reference.plan.groups.size());

  // Disjoint, covering, every group non-empty.
  std::set<std::string> seen;
  std::size_t total = 0;
  for (const auto& group : random.plan.groups) {
    CHECK_FALSE(group.empty());
    total += group.size();
    seen.insert(group.begin(), group.end());
  }
  CHECK(total == record.contexts.size());
  CHECK(seen.size() == record.contexts.size());
}

TEST_CASE("kmeans groups everything into the planner's count") {
  const CorpusRecord record = sample_record(3);
  Runner runner;
  const PipelineResult reference = runner.run(MethodId::COrg, record);
  const PipelineResult kmeans = runner.run(MethodId::KMeans, record);
  CHECK(kmeans.plan.groups.size() == reference.plan.groups.size());
  std::size_t total = 0;
  for (const auto& group : kmeans.plan.groups) {
    CHECK_FALSE(group.empty());
    total += group.size();
  }
  CHECK(total == record.contexts.size());
}

TEST_CASE("retrieve keeps the top five ranked contexts in one group") {
  const CorpusRecord record = sample_record(4);
  REQUIRE(record.contexts.size() > 5);
  Runner runner;
  const PipelineResult retrieve = runner.run(MethodId::Retrieve, record);
  REQUIRE(retrieve.plan.groups.size() == 1);
  CHECK(retrieve.plan.groups[0].size() == 5);
  CHECK(retrieve.trace.runs.size() == 1);
}

TEST_CASE("summarize feeds a single pseudo-context") {
  const CorpusRecord record = sample_record(5);
  Runner runner;
  const PipelineResult summarize = runner.run(MethodId::Summarize, record);
  REQUIRE(summarize.plan.groups.size() == 1);
  CHECK(summarize.plan.groups[0] == std::vector<std::string>{"summary"});
  CHECK(summarize.trace.runs.size() == 1);
  // The default summarizer keeps one sentence per context, so the prompt is
  // shorter than the full corpus.
  const PipelineResult base = runner.run(MethodId::Base, record);
  CHECK(summarize.trace.total_input_tokens() < base.trace.total_input_tokens());
}

TEST_CASE("missing providers are configuration errors naming the method") {
  const CorpusRecord record = sample_record(6);
  RuleOracle oracle;
  MockGenerator generator;
  Providers empty;
  CHECK_THROWS_WITH_AS(run_baseline(MethodId::KMeans, record, oracle,
                                    generator, empty, {}),
                       "kmeans needs an embedder provider", ConfigError);
  CHECK_THROWS_WITH_AS(run_baseline(MethodId::Retrieve, record, oracle,
                                    generator, empty, {}),
                       "retrieve needs a ranker provider", ConfigError);
  CHECK_THROWS_WITH_AS(run_baseline(MethodId::Summarize, record, oracle,
                                    generator, empty, {}),
                       "summarize needs a summarizer provider", ConfigError);
}

TEST_CASE("dropping duplicates makes the pipeline cheaper than base") {
  Runner runner;
  for (std::uint64_t seed = 10; seed < 20; ++seed) {
    const CorpusRecord record = sample_record(seed);
    const PipelineResult corg = runner.run(MethodId::COrg, record);
    const PipelineResult base = runner.run(MethodId::Base, record);
    CHECK(corg.trace.total_input_tokens() < base.trace.total_input_tokens());

    const PipelineResult separate = runner.run(MethodId::Separate, record);
    CHECK(corg.trace.total_output_tokens() <=
          separate.trace.total_output_tokens());
  }
}

TEST_CASE("method table keeps the grouping quality ordering") {
  std::vector<CorpusRecord> records;
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    records.push_back(sample_record(seed + 40));
  }
  Runner runner;
  StructuredLineExtractor extractor;
  const auto rows = compare_methods(
      records, {MethodId::COrg, MethodId::Random, MethodId::KMeans},
      runner.oracle, runner.generator, runner.providers, runner.config,
      extractor);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].metrics.d_f1 >= rows[1].metrics.d_f1 - 1e-12);
  CHECK(rows[1].metrics.d_f1 >= rows[2].metrics.d_f1 - 1e-12);
  CHECK(rows[0].mean_runs >= 1.0);
}

TEST_CASE("method names round-trip") {
  for (MethodId method :
       {MethodId::Base, MethodId::Retrieve, MethodId::Summarize,
        MethodId::Random, MethodId::KMeans, MethodId::COrg,
        MethodId::Separate}) {
    CHECK(method_from_string(std::string(to_string(method))) == method);
  }
  CHECK_THROWS_AS(method_from_string("other"), ConfigError);
}

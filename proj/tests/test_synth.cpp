#include <doctest.h>

#include "corg/graph.hpp"
#include "corg/oracle.hpp"
#include "corg/synth.hpp"

using namespace corg;

TEST_CASE("spec validation") {
  SynthSpec bad;
  bad.descriptors_per_entity = 0;
  CHECK_THROWS_AS(validate_spec(bad), ValidationError);
  bad = SynthSpec{};
  bad.ambiguous_fraction = 1.5;
  CHECK_THROWS_AS(validate_spec(bad), ValidationError);
}

TEST_CASE("k=2 m=2 with duplicates produces four bases plus four copies") {
  SynthSpec spec;
  spec.seed = 3;
  spec.descriptors_per_entity = 2;
  spec.conflicts_per_descriptor = 2;
  spec.duplicates_per_context = 1;
  spec.ambiguous_fraction = 0.25;  // one twin
  spec.none_fraction = 0.25;       // one filler
  const auto records = synth_corpus(spec);
  REQUIRE(records.size() == 1);
  const CorpusRecord& record = records[0];
  CHECK(record.contexts.size() == 4 + 4 + 1 + 1);
  CHECK(record.question.sub_questions.size() == 2);
  CHECK(record.contexts[0].id == "c0");
  CHECK(record.contexts[9].id == "c9");

  // With twins and fillers present, the relation graph carries every label.
  RuleOracle oracle;
  const auto graph =
      build_graph_naive(record.contexts, record.question, oracle);
  bool seen[5] = {false, false, false, false, false};
  for (const auto& [key, relation] : graph.edges()) {
    seen[static_cast<int>(relation)] = true;
  }
  for (int i = 0; i < 5; ++i) {
    CHECK(seen[i]);
  }
}

TEST_CASE("gold relation annotations agree with the classifier") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    SynthSpec spec;
    spec.seed = seed;
    spec.questions = 2;
    spec.descriptors_per_entity = 1 + seed % 3;
    spec.conflicts_per_descriptor = 1 + seed % 2;
    spec.duplicates_per_context = seed % 2;
    spec.ambiguous_fraction = 0.5;
    spec.none_fraction = 0.5;
    for (const CorpusRecord& record : synth_corpus(spec)) {
      REQUIRE(!record.contexts.empty());
      const ParsedContext& first = record.contexts[0];
      CHECK_FALSE(first.gold_relation.has_value());
      for (std::size_t i = 1; i < record.contexts.size(); ++i) {
        REQUIRE(record.contexts[i].gold_relation.has_value());
        CHECK(*record.contexts[i].gold_relation ==
              classify_graph_relation(first, record.contexts[i]));
      }
    }
  }
}

TEST_CASE("k=1 m=1 with nothing else gives single-context records") {
  SynthSpec spec;
  spec.seed = 9;
  spec.descriptors_per_entity = 1;
  spec.conflicts_per_descriptor = 1;
  const auto records = synth_corpus(spec);
  REQUIRE(records.size() == 1);
  CHECK(records[0].contexts.size() == 1);
  RuleOracle oracle;
  const auto graph =
      build_graph_corg(records[0].contexts, records[0].question, oracle);
  CHECK(graph.edges().empty());
  CHECK(graph.call_count() == 0);
}

TEST_CASE("every gold answer appears verbatim in its context body") {
  SynthSpec spec;
  spec.seed = 21;
  spec.questions = 3;
  spec.descriptors_per_entity = 3;
  spec.conflicts_per_descriptor = 2;
  for (const CorpusRecord& record : synth_corpus(spec)) {
    for (const ParsedContext& ctx : record.contexts) {
      REQUIRE(ctx.answer.has_value());
      CHECK(ctx.body.find(*ctx.answer) != std::string::npos);
    }
    CHECK(record.question.text.back() == '?');
  }
}

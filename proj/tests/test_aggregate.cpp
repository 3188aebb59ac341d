#include <doctest.h>

#include <algorithm>
#include <set>

#include "corg/aggregate.hpp"
#include "corg/oracle.hpp"
#include "corg/synth.hpp"
#include "support/fixtures.hpp"

using namespace corg;
using corg::testing::hockey_question;
using corg::testing::make_context;

TEST_CASE("prompt rendering numbers contexts and keeps the question") {
  const std::vector<ParsedContext> contexts = {
      make_context("c0", "IIHF", "Slovakia"),
      make_context("c3", "junior", "Vancouver and Victoria"),
  };
  const std::string prompt = render_prompt("host country?", contexts);
  CHECK(prompt.find("[1]") != std::string::npos);
  CHECK(prompt.find("[2]") != std::string::npos);
  CHECK(prompt.find("host country?") != std::string::npos);
  CHECK(prompt.find(contexts[0].body) != std::string::npos);

  CHECK_THROWS_AS(render_prompt("", contexts), ValidationError);
  CHECK_THROWS_AS(render_prompt("q?", {}), ValidationError);
}

TEST_CASE("mock generator reads the parsed triples") {
  const std::vector<ParsedContext> group = {
      make_context("c0", "IIHF", "Slovakia"),
      make_context("c3", "junior", "Vancouver and Victoria"),
  };
  MockGenerator generator;
  const auto entries = generate_group(group, "host countries?", generator);
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].answer == "Slovakia");
  CHECK(entries[0].descriptor == "IIHF");
  CHECK(entries[0].citations == std::vector<std::string>{"c0"});
  CHECK(entries[1].answer == "Vancouver and Victoria");
  CHECK(entries[1].descriptor == "junior");
  CHECK(entries[1].citations == std::vector<std::string>{"c3"});
}

TEST_CASE("singleton group yields exactly one entry citing that context") {
  MockGenerator generator;
  const auto entries = generate_group({make_context("c7", "IIHF", "Slovakia")},
                                      "host country?", generator);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].citations == std::vector<std::string>{"c7"});
}

namespace {

class CannedGenerator final : public Generator {
 public:
  explicit CannedGenerator(std::string text) : text_(std::move(text)) {}
  std::string generate(const std::string&,
                       const std::vector<ParsedContext>&) override {
    return text_;
  }

 private:
  std::string text_;
};

}  // namespace

TEST_CASE("citation outside the group range is an error naming the index") {
  CannedGenerator generator("IIHF: Slovakia [9]\n");
  const std::vector<ParsedContext> group = {
      make_context("c0", "IIHF", "Slovakia"),
      make_context("c1", "IIHF", "Slovakia"),
  };
  CHECK_THROWS_WITH_AS(generate_group(group, "q?", generator),
                       "citation index 9 out of range for a group of 2",
                       ValidationError);
}

TEST_CASE("lines without citations are kept with empty citation lists") {
  CannedGenerator generator("IIHF: Slovakia\n");
  const auto entries = generate_group({make_context("c0", "IIHF", "Slovakia")},
                                      "q?", generator);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].citations.empty());
}

TEST_CASE("merging unions citations of equal entries and keeps order") {
  std::vector<std::vector<ResponseEntry>> per_group;
  per_group.push_back({{"Slovakia", "IIHF", {"c1"}}});
  per_group.push_back({{"Canada and British Columbia", "IIHF", {"c3"}}});
  const AggregateResponse distinct = merge_responses(per_group);
  REQUIRE(distinct.entries.size() == 2);
  CHECK(distinct.entries[0].answer == "Slovakia");
  CHECK(distinct.entries[1].answer == "Canada and British Columbia");
  CHECK(distinct.rendered ==
        "IIHF: Slovakia [c1]\nIIHF: Canada and British Columbia [c3]");

  per_group.clear();
  per_group.push_back({{"Slovakia", "IIHF", {"c1"}}});
  per_group.push_back({{"slovakia.", "IIHF", {"c2"}}});
  const AggregateResponse merged = merge_responses(per_group);
  REQUIRE(merged.entries.size() == 1);
  CHECK(merged.entries[0].citations == std::vector<std::string>{"c1", "c2"});

  CHECK(merge_responses({}).entries.empty());
}

TEST_CASE("pipeline on the five-context example surfaces both conflict sides") {
  CorpusRecord record;
  record.id = "r0";
  record.question = hockey_question();
  record.question.sub_questions.push_back(
      {std::string("IIHF"),
       {"Slovakia", "Canada and British Columbia"}});
  record.question.sub_questions.push_back(
      {std::string("junior"), {"Vancouver and Victoria"}});
  record.contexts = corg::testing::hockey_contexts();

  RuleOracle oracle;
  MockGenerator generator;
  const PipelineResult result = run_pipeline(record, oracle, generator);

  CHECK(result.response.rendered.find("Slovakia") != std::string::npos);
  CHECK(result.response.rendered.find("Canada and British Columbia") !=
        std::string::npos);

  // Conflicting answers must cite disjoint contexts.
  std::set<std::string> slovakia_citations;
  std::set<std::string> canada_citations;
  for (const ResponseEntry& entry : result.response.entries) {
    if (entry.answer == "Slovakia") {
      slovakia_citations.insert(entry.citations.begin(), entry.citations.end());
    }
    if (entry.answer == "Canada and British Columbia") {
      canada_citations.insert(entry.citations.begin(), entry.citations.end());
    }
  }
  std::set<std::string> overlap;
  std::set_intersection(slovakia_citations.begin(), slovakia_citations.end(),
                        canada_citations.begin(), canada_citations.end(),
                        std::inserter(overlap, overlap.begin()));
  CHECK(overlap.empty());

  CHECK(result.trace.groups == result.plan.groups.size());
  CHECK(result.trace.runs.size() == result.plan.groups.size());
  CHECK(result.trace.oracle_calls == result.graph.call_count());
}

TEST_CASE("a duplicated pair collapses to one group and one run") {
  CorpusRecord record;
  record.id = "r0";
  record.question = hockey_question();
  record.contexts = {
      make_context("c0", "IIHF", "Slovakia"),
      make_context("c1", "IIHF", "Slovakia"),
  };
  RuleOracle oracle;
  MockGenerator generator;
  const PipelineResult result = run_pipeline(record, oracle, generator);
  CHECK(result.plan.groups.size() == 1);
  CHECK(result.trace.runs.size() == 1);
  CHECK(result.response.entries.size() == 1);
}

TEST_CASE("a record without usable contexts fails before generation") {
  CorpusRecord record;
  record.id = "r0";
  record.question = hockey_question();
  RuleOracle oracle;
  MockGenerator generator;
  CHECK_THROWS_AS(run_pipeline(record, oracle, generator), ValidationError);

  // Contexts for a different entity do not count either.
  record.contexts = {make_context("c0", "IIHF", "Slovakia", "Other Event")};
  CHECK_THROWS_AS(run_pipeline(record, oracle, generator), ValidationError);
}

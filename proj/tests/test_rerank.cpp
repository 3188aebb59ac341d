#include <doctest.h>

#include <algorithm>
#include <set>

#include "corg/graph.hpp"
#include "corg/rerank.hpp"
#include "support/fixtures.hpp"

using namespace corg;
using corg::testing::hockey_contexts;
using corg::testing::hockey_question;
using corg::testing::make_context;

TEST_CASE("pluralization") {
  CHECK(pluralize_question("2019 World Ice Hockey Championships host country?") ==
        "2019 World Ice Hockey Championships host countries?");
  CHECK(pluralize_question("Who are the hosts?") == "Who are the hosts?");
  CHECK(pluralize_question("Who was the boss?") == "Who was the bosses?");
  CHECK(pluralize_question("Which fox?") == "Which foxes?");
  CHECK(pluralize_question("Which match?") == "Which matches?");
  CHECK(pluralize_question("Which day?") == "Which days?");
  CHECK(pluralize_question("Host city?") == "Host cities?");
  CHECK_THROWS_AS(pluralize_question(""), ValidationError);

  const std::map<std::string, std::string> overrides{{"person", "people"}};
  CHECK(pluralize_question("Which person?", overrides) == "Which people?");
}

namespace {

GroupPlan plan_for_seed(std::uint64_t seed) {
  const auto contexts = hockey_contexts();
  const Question question = hockey_question();
  RuleOracle oracle;
  const auto graph = build_graph_corg(contexts, question, oracle);
  RerankConfig config;
  config.seed = seed;
  return plan_groups(graph, contexts, question, config);
}

std::set<std::string> removed_ids(const GroupPlan& plan, RemovalReason reason) {
  std::set<std::string> ids;
  for (const Removal& removal : plan.removed) {
    if (removal.reason == reason) {
      ids.insert(removal.id);
    }
  }
  return ids;
}

}  // namespace

TEST_CASE("worked five-context example") {
  // c0/c1 duplicated, c2 conflicting, c3 distracting, c4 bare twin of c0.
  // Seed picked so the first duplicate survives; other seeds only change
  // which twin of the pair is kept.
  std::uint64_t seed = 0;
  while (plan_for_seed(seed).removed.size() != 2 ||
         removed_ids(plan_for_seed(seed), RemovalReason::Duplicate) !=
             std::set<std::string>{"c1"}) {
    ++seed;
    REQUIRE(seed < 32);
  }
  const GroupPlan plan = plan_for_seed(seed);

  CHECK(removed_ids(plan, RemovalReason::Duplicate) ==
        std::set<std::string>{"c1"});
  CHECK(removed_ids(plan, RemovalReason::ReplacedAmbiguous) ==
        std::set<std::string>{"c4"});
  REQUIRE(plan.groups.size() == 2);
  CHECK(plan.groups[0] == std::vector<std::string>{"c0", "c3"});
  CHECK(plan.groups[1] == std::vector<std::string>{"c2"});
  CHECK(plan.group_question[0] ==
        "2019 World Ice Hockey Championships host countries?");
  CHECK(plan.group_question[1] ==
        "2019 World Ice Hockey Championships host country?");
}

TEST_CASE("single context gives one untouched singleton group") {
  const std::vector<ParsedContext> contexts = {
      make_context("c0", "IIHF", "Slovakia")};
  const Question question = hockey_question();
  RuleOracle oracle;
  const auto graph = build_graph_corg(contexts, question, oracle);
  const GroupPlan plan = plan_groups(graph, contexts, question, {});
  REQUIRE(plan.groups.size() == 1);
  CHECK(plan.groups[0] == std::vector<std::string>{"c0"});
  CHECK(plan.group_question[0] == question.text);
  CHECK(plan.removed.empty());
}

TEST_CASE("k mutually counterfactual contexts separate into k singletons") {
  std::vector<ParsedContext> contexts;
  const std::vector<std::string> answers = {"Porto", "Quito", "Bergen", "Lima"};
  for (std::size_t i = 0; i < answers.size(); ++i) {
    contexts.push_back(make_context("c" + std::to_string(i), "IIHF",
                                    answers[i]));
  }
  const Question question = hockey_question();
  RuleOracle oracle;
  const auto graph = build_graph_corg(contexts, question, oracle);
  const GroupPlan plan = plan_groups(graph, contexts, question, {});
  REQUIRE(plan.groups.size() == answers.size());
  for (const auto& group : plan.groups) {
    CHECK(group.size() == 1);
  }
  CHECK(plan.removed.empty());
}

TEST_CASE("empty context list is rejected") {
  CHECK_THROWS_AS(plan_groups(ContextGraph(std::vector<std::string>{}), {},
                              hockey_question(), {}),
                  ValidationError);
}

TEST_CASE("seed changes only the surviving duplicate") {
  std::set<std::string> survivors_seen;
  std::set<std::size_t> group_counts;
  std::multiset<std::size_t> reference_sizes;
  for (std::uint64_t seed = 0; seed < 24; ++seed) {
    const GroupPlan plan = plan_for_seed(seed);
    group_counts.insert(plan.groups.size());
    std::multiset<std::size_t> sizes;
    for (const auto& group : plan.groups) {
      sizes.insert(group.size());
    }
    if (seed == 0) {
      reference_sizes = sizes;
    } else {
      CHECK(sizes == reference_sizes);
    }
    const auto removed = removed_ids(plan, RemovalReason::Duplicate);
    REQUIRE(removed.size() == 1);
    survivors_seen.insert(*removed.begin() == "c0" ? "c1" : "c0");
  }
  CHECK(group_counts == std::set<std::size_t>{2});
  // Both members of the duplicate pair should win at least once.
  CHECK(survivors_seen == std::set<std::string>{"c0", "c1"});
}

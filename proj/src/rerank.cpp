#include "corg/rerank.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>

namespace corg {

namespace {

bool is_vowel(char c) {
  switch (std::tolower(static_cast<unsigned char>(c))) {
    case 'a':
    case 'e':
    case 'i':
    case 'o':
    case 'u':
      return true;
    default:
      return false;
  }
}

bool ends_with(const std::string& word, std::string_view suffix) {
  return word.size() >= suffix.size() &&
         word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string pluralize_word(const std::string& word,
                           const std::map<std::string, std::string>& overrides) {
  if (auto it = overrides.find(word); it != overrides.end()) {
    return it->second;
  }
  std::string lower(word);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  if (auto it = overrides.find(lower); it != overrides.end()) {
    return it->second;
  }
  if (ends_with(lower, "ss") || ends_with(lower, "x") || ends_with(lower, "z") ||
      ends_with(lower, "ch") || ends_with(lower, "sh")) {
    return word + "es";
  }
  if (ends_with(lower, "s")) {
    return word;
  }
  if (lower.size() >= 2 && ends_with(lower, "y") &&
      !is_vowel(lower[lower.size() - 2])) {
    return word.substr(0, word.size() - 1) + "ies";
  }
  return word + "s";
}

}  // namespace

std::string pluralize_question(
    const std::string& question,
    const std::map<std::string, std::string>& overrides) {
  if (question.empty()) {
    throw ValidationError("cannot pluralize an empty question");
  }
  // Find the last alphabetic run, skipping the trailing "?" if present.
  std::size_t end = question.size();
  while (end > 0 && !std::isalpha(static_cast<unsigned char>(question[end - 1]))) {
    --end;
  }
  if (end == 0) {
    return question;  // no word to pluralize
  }
  std::size_t start = end;
  while (start > 0 &&
         std::isalpha(static_cast<unsigned char>(question[start - 1]))) {
    --start;
  }
  const std::string word = question.substr(start, end - start);
  return question.substr(0, start) + pluralize_word(word, overrides) +
         question.substr(end);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

GroupPlan plan_groups(const ContextGraph& graph,
                      const std::vector<ParsedContext>& contexts,
                      const Question& question, const RerankConfig& config) {
  if (contexts.empty()) {
    throw ValidationError("cannot plan groups over an empty context list");
  }
  const std::size_t n = contexts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!graph.has_edge(contexts[i].id, contexts[j].id)) {
        throw ValidationError("graph is not fully connected over the contexts");
      }
    }
  }

  GroupPlan plan;
  std::mt19937_64 rng(config.seed);

  // 1. Duplicate classes, one survivor each.
  UnionFind dup(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (graph.edge_or_throw(contexts[i].id, contexts[j].id) ==
          Relation::Duplicated) {
        dup.unite(i, j);
      }
    }
  }
  std::vector<std::vector<std::size_t>> dup_classes;
  {
    std::map<std::size_t, std::size_t> root_to_class;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t root = dup.find(i);
      auto it = root_to_class.find(root);
      if (it == root_to_class.end()) {
        root_to_class.emplace(root, dup_classes.size());
        dup_classes.push_back({i});
      } else {
        dup_classes[it->second].push_back(i);
      }
    }
  }
  std::vector<bool> survives(n, false);
  for (const auto& members : dup_classes) {
    std::size_t keep = 0;
    if (members.size() > 1) {
      keep = std::uniform_int_distribution<std::size_t>(0, members.size() - 1)(rng);
    }
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (k == keep) {
        survives[members[k]] = true;
      } else {
        plan.removed.push_back({contexts[members[k]].id, RemovalReason::Duplicate});
      }
    }
  }

  // 2. Bare contexts interchangeable with a surviving described one are
  // redundant; bare contexts related only through None edges stay.
  std::vector<std::size_t> replaced;
  for (std::size_t i = 0; i < n; ++i) {
    if (!survives[i] || contexts[i].descriptor) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || !survives[j] || !contexts[j].descriptor) {
        continue;
      }
      if (graph.edge_or_throw(contexts[i].id, contexts[j].id) ==
          Relation::Ambiguous) {
        replaced.push_back(i);
        break;
      }
    }
  }
  for (std::size_t i : replaced) {
    survives[i] = false;
    plan.removed.push_back({contexts[i].id, RemovalReason::ReplacedAmbiguous});
  }

  std::vector<std::size_t> survivors;
  for (std::size_t i = 0; i < n; ++i) {
    if (survives[i]) {
      survivors.push_back(i);
    }
  }

  // 3. Conflict components; after deduplication each component is a clique
  // of mutually counterfactual contexts.
  UnionFind conflict(n);
  for (std::size_t a : survivors) {
    for (std::size_t b : survivors) {
      if (a < b && graph.edge_or_throw(contexts[a].id, contexts[b].id) ==
                       Relation::Counterfactual) {
        conflict.unite(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i : survivors) {
    components[conflict.find(i)].push_back(i);
  }
  std::size_t group_count = 1;
  for (const auto& [root, members] : components) {
    group_count = std::max(group_count, members.size());
  }

  plan.groups.assign(group_count, {});

  // The s smallest groups, ties broken by index. Filling whole cliques
  // this way keeps group sizes within one of each other.
  auto smallest_groups = [&](std::size_t count) {
    std::vector<std::size_t> order(plan.groups.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return plan.groups[a].size() < plan.groups[b].size();
                     });
    order.resize(count);
    return order;
  };

  std::vector<std::size_t> leftovers;
  for (auto& [root, members] : components) {
    if (members.size() < 2) {
      leftovers.insert(leftovers.end(), members.begin(), members.end());
      continue;
    }
    std::vector<std::size_t> ordered = members;
    std::sort(ordered.begin(), ordered.end(),
              [&](std::size_t a, std::size_t b) {
                return contexts[a].id < contexts[b].id;
              });
    const std::vector<std::size_t> targets = smallest_groups(ordered.size());
    for (std::size_t k = 0; k < ordered.size(); ++k) {
      plan.groups[targets[k]].push_back(contexts[ordered[k]].id);
    }
  }

  // 4. Everything else goes to the currently smallest group.
  std::sort(leftovers.begin(), leftovers.end());
  for (std::size_t i : leftovers) {
    plan.groups[smallest_groups(1)[0]].push_back(contexts[i].id);
  }

  // 5. Multi-context groups ask the plural form.
  plan.group_question.reserve(plan.groups.size());
  for (const auto& group : plan.groups) {
    if (group.empty()) {
      throw ValidationError("planner produced an empty group");
    }
    plan.group_question.push_back(
        group.size() >= 2
            ? pluralize_question(question.text, config.plural_overrides)
            : question.text);
  }
  return plan;
}

}  // namespace corg

#include "corg/types.hpp"

#include <algorithm>

namespace corg {

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::Duplicated:
      return "Duplicated";
    case Relation::Counterfactual:
      return "Counterfactual";
    case Relation::Distracting:
      return "Distracting";
    case Relation::Ambiguous:
      return "Ambiguous";
    case Relation::None:
      return "None";
  }
  return "Unknown";
}

std::string_view to_string(TaxonomyLabel label) {
  switch (label) {
    case TaxonomyLabel::Ambiguous:
      return "Ambiguous";
    case TaxonomyLabel::Distracting:
      return "Distracting";
    case TaxonomyLabel::Counterfactual:
      return "Counterfactual";
    case TaxonomyLabel::Duplicated:
      return "Duplicated";
  }
  return "Unknown";
}

namespace {

std::string lowered(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

}  // namespace

Relation relation_from_string(std::string_view name) {
  const std::string key = lowered(name);
  if (key == "duplicated" || key == "dup") return Relation::Duplicated;
  if (key == "counterfactual" || key == "counter") return Relation::Counterfactual;
  if (key == "distracting") return Relation::Distracting;
  if (key == "ambiguous") return Relation::Ambiguous;
  if (key == "none") return Relation::None;
  throw ParseError("unknown relation label \"" + std::string(name) + "\"");
}

TaxonomyLabel taxonomy_of(Relation r) {
  switch (r) {
    case Relation::Duplicated:
      return TaxonomyLabel::Duplicated;
    case Relation::Counterfactual:
      return TaxonomyLabel::Counterfactual;
    case Relation::Distracting:
      return TaxonomyLabel::Distracting;
    case Relation::Ambiguous:
    case Relation::None:
      return TaxonomyLabel::Ambiguous;
  }
  throw ValidationError("unhandled relation value");
}

std::vector<std::pair<std::string, std::string>> CorpusRecord::gold_pairs()
    const {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const SubQuestion& sq : question.sub_questions) {
    if (!sq.descriptor) {
      continue;
    }
    for (const std::string& answer : sq.answers) {
      pairs.emplace_back(*sq.descriptor, answer);
    }
  }
  return pairs;
}

std::vector<std::string> CorpusRecord::gold_answers() const {
  std::vector<std::string> answers;
  for (const SubQuestion& sq : question.sub_questions) {
    answers.insert(answers.end(), sq.answers.begin(), sq.answers.end());
  }
  return answers;
}

std::vector<std::string> CorpusRecord::gold_descriptors() const {
  std::vector<std::string> descriptors;
  for (const SubQuestion& sq : question.sub_questions) {
    if (sq.descriptor) {
      descriptors.push_back(*sq.descriptor);
    }
  }
  return descriptors;
}

ContextGraph::ContextGraph(std::vector<std::string> nodes)
    : nodes_(std::move(nodes)) {
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
      if (nodes_[i] == nodes_[j]) {
        throw ValidationError("duplicate graph node id \"" + nodes_[i] + "\"");
      }
    }
  }
}

std::size_t ContextGraph::pair_count() const {
  const std::size_t n = nodes_.size();
  return n * (n - 1) / 2;
}

std::pair<std::string, std::string> ContextGraph::key(
    const std::string& a, const std::string& b) const {
  if (a == b) {
    throw ValidationError("self edge on node \"" + a + "\"");
  }
  const bool known_a = std::find(nodes_.begin(), nodes_.end(), a) != nodes_.end();
  const bool known_b = std::find(nodes_.begin(), nodes_.end(), b) != nodes_.end();
  if (!known_a || !known_b) {
    throw ValidationError("edge references unknown node \"" +
                          (known_a ? b : a) + "\"");
  }
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

void ContextGraph::set_edge(const std::string& a, const std::string& b,
                            Relation r) {
  const auto k = key(a, b);
  auto it = edges_.find(k);
  if (it != edges_.end()) {
    if (it->second != r) {
      throw ValidationError("conflicting relabel of edge (" + a + ", " + b +
                            ")");
    }
    return;
  }
  edges_.emplace(k, r);
}

bool ContextGraph::has_edge(const std::string& a, const std::string& b) const {
  return edge(a, b).has_value();
}

std::optional<Relation> ContextGraph::edge(const std::string& a,
                                           const std::string& b) const {
  const auto k = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  auto it = edges_.find(k);
  if (it == edges_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Relation ContextGraph::edge_or_throw(const std::string& a,
                                     const std::string& b) const {
  auto r = edge(a, b);
  if (!r) {
    throw ValidationError("missing edge (" + a + ", " + b + ")");
  }
  return *r;
}

std::string_view to_string(RemovalReason reason) {
  switch (reason) {
    case RemovalReason::Duplicate:
      return "duplicate";
    case RemovalReason::ReplacedAmbiguous:
      return "replaced-ambiguous";
  }
  return "unknown";
}

RemovalReason removal_reason_from_string(std::string_view name) {
  if (name == "duplicate") return RemovalReason::Duplicate;
  if (name == "replaced-ambiguous") return RemovalReason::ReplacedAmbiguous;
  throw ParseError("unknown removal reason \"" + std::string(name) + "\"");
}

std::size_t RunTrace::total_input_tokens() const {
  std::size_t total = 0;
  for (const RunTokens& run : runs) {
    total += run.input_tokens;
  }
  return total;
}

std::size_t RunTrace::total_output_tokens() const {
  std::size_t total = 0;
  for (const RunTokens& run : runs) {
    total += run.output_tokens;
  }
  return total;
}

}  // namespace corg

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace corg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class TransportError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Edge label between two contexts that answer the same question.
/// Ambiguous is the interchangeable case (one descriptor missing, same
/// answer); None is the same descriptor situation with different answers.
enum class Relation {
  Duplicated = 0,
  Counterfactual = 1,
  Distracting = 2,
  Ambiguous = 3,
  None = 4,
};

/// Reporting taxonomy: Ambiguous and None collapse into one bucket.
enum class TaxonomyLabel {
  Ambiguous,
  Distracting,
  Counterfactual,
  Duplicated,
};

std::string_view to_string(Relation r);
std::string_view to_string(TaxonomyLabel label);
Relation relation_from_string(std::string_view name);
TaxonomyLabel taxonomy_of(Relation r);

/// A document plus its extracted (surface, descriptor, answer) triple.
/// Descriptor and answer use optional rather than sentinel strings: an
/// absent descriptor is the "no specific detail" case and an absent answer
/// marks a context that does not answer the question.
struct ParsedContext {
  std::string id;
  std::string title;
  std::string body;
  std::string surface;
  std::optional<std::string> descriptor;
  std::optional<std::string> answer;
  /// Test-only annotation: intended relation to the record's first context.
  std::optional<Relation> gold_relation;
};

struct SubQuestion {
  std::optional<std::string> descriptor;
  std::vector<std::string> answers;
};

struct Question {
  std::string text;
  std::string entity;
  std::optional<std::string> descriptor;
  std::vector<SubQuestion> sub_questions;
};

struct CorpusRecord {
  std::string id;
  Question question;
  std::vector<ParsedContext> contexts;

  /// Flattened (descriptor, answer) pairs from sub-questions that carry a
  /// descriptor.
  std::vector<std::pair<std::string, std::string>> gold_pairs() const;
  /// Every gold answer string, in sub-question order.
  std::vector<std::string> gold_answers() const;
  /// Every present sub-question descriptor, in order.
  std::vector<std::string> gold_descriptors() const;
};

/// Fully connected relation graph over context ids. Edges are unordered:
/// inserting (a, b, r) makes (b, a) resolve to r.
class ContextGraph {
 public:
  ContextGraph() = default;
  explicit ContextGraph(std::vector<std::string> nodes);

  const std::vector<std::string>& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t pair_count() const;

  void set_edge(const std::string& a, const std::string& b, Relation r);
  bool has_edge(const std::string& a, const std::string& b) const;
  std::optional<Relation> edge(const std::string& a, const std::string& b) const;
  Relation edge_or_throw(const std::string& a, const std::string& b) const;

  const std::map<std::pair<std::string, std::string>, Relation>& edges() const {
    return edges_;
  }
  bool fully_connected() const { return edges_.size() == pair_count(); }

  std::size_t call_count() const { return call_count_; }
  void set_call_count(std::size_t calls) { call_count_ = calls; }

 private:
  std::pair<std::string, std::string> key(const std::string& a,
                                          const std::string& b) const;

  std::vector<std::string> nodes_;
  std::map<std::pair<std::string, std::string>, Relation> edges_;
  std::size_t call_count_ = 0;
};

enum class RemovalReason {
  Duplicate,
  ReplacedAmbiguous,
};

std::string_view to_string(RemovalReason reason);
RemovalReason removal_reason_from_string(std::string_view name);

struct Removal {
  std::string id;
  RemovalReason reason;
};

/// Ordered partition of the surviving contexts plus the question form each
/// group is asked with.
struct GroupPlan {
  std::vector<std::vector<std::string>> groups;
  std::vector<std::string> group_question;
  std::vector<Removal> removed;
};

struct ResponseEntry {
  std::string answer;
  std::optional<std::string> descriptor;
  std::vector<std::string> citations;
};

struct AggregateResponse {
  std::vector<ResponseEntry> entries;
  std::string rendered;
};

struct RunTokens {
  std::size_t input_tokens = 0;
  std::size_t output_tokens = 0;
};

struct RunTrace {
  std::size_t oracle_calls = 0;
  std::size_t groups = 0;
  std::vector<RunTokens> runs;

  std::size_t total_input_tokens() const;
  std::size_t total_output_tokens() const;
};

}  // namespace corg

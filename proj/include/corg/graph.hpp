#pragma once

#include <optional>
#include <vector>

#include "corg/oracle.hpp"
#include "corg/types.hpp"

namespace corg {

/// Sound records only edges forced by the relation definitions.
/// PaperLiteral additionally mirrors edges across counterfactual and
/// duplicated pairs even when the label is not forced.
enum class BuilderMode {
  Sound,
  PaperLiteral,
};

BuilderMode builder_mode_from_string(std::string_view name);
std::string_view to_string(BuilderMode mode);

/// Result of composing relation(i, pivot) with relation(pivot, j): either
/// the unique relation(i, j) consistent with the definitions, or the set of
/// labels that remain possible (always >= 2 candidates).
struct CompositionResult {
  std::optional<Relation> determined;
  std::vector<Relation> candidates;

  bool is_determined() const { return determined.has_value(); }
};

CompositionResult compose_relation(Relation r_ip, Relation r_pj,
                                   bool pivot_has_descriptor);

/// Brute-force reference: classify every pair directly.
/// call_count == n(n-1)/2.
ContextGraph build_graph_naive(const std::vector<ParsedContext>& contexts,
                               const Question& question,
                               RelationOracle& oracle);

/// Iterative builder: one pivot per round queries only its missing edges;
/// each direct answer is propagated through the composition calculus to a
/// fixed point so forced edges are never queried.
ContextGraph build_graph_corg(const std::vector<ParsedContext>& contexts,
                              const Question& question, RelationOracle& oracle,
                              BuilderMode mode = BuilderMode::Sound);

}  // namespace corg

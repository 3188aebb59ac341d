#pragma once

#include "corg/types.hpp"

namespace corg {

/// Pairwise relation classifier. Implementations must be symmetric in the
/// two contexts and deterministic for fixed inputs.
class RelationOracle {
 public:
  virtual ~RelationOracle() = default;

  virtual Relation classify(const ParsedContext& pivot,
                            const ParsedContext& other,
                            const Question& question) = 0;

  virtual bool has_descriptor(const ParsedContext& ctx) const {
    return ctx.descriptor.has_value();
  }
};

/// A context is relevant when its surface matches the question entity and,
/// if the question carries a descriptor, the descriptors match too. All
/// comparisons use normalized text.
bool is_relevant(const Question& question, const ParsedContext& ctx);

/// Four-way label over two relevant contexts with answers present.
/// Throws ValidationError when either answer is absent.
TaxonomyLabel classify_taxonomy(const ParsedContext& a, const ParsedContext& b);

/// Five-way graph label: like classify_taxonomy but the ambiguous case
/// splits on answer equality (same answer -> Ambiguous, else None).
Relation classify_graph_relation(const ParsedContext& a,
                                 const ParsedContext& b);

/// Deterministic oracle over pre-parsed triples.
class RuleOracle final : public RelationOracle {
 public:
  Relation classify(const ParsedContext& pivot, const ParsedContext& other,
                    const Question& question) override;
};

}  // namespace corg

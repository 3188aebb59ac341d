#include "corg/oracle.hpp"

#include "corg/text.hpp"

namespace corg {

bool is_relevant(const Question& question, const ParsedContext& ctx) {
  if (!normalized_equal(ctx.surface, question.entity)) {
    return false;
  }
  if (!question.descriptor) {
    return true;
  }
  return ctx.descriptor &&
         normalized_equal(*ctx.descriptor, *question.descriptor);
}

namespace {

struct PairView {
  bool same_descriptor = false;
  bool both_present = false;
  bool same_answer = false;
};

PairView view_pair(const ParsedContext& a, const ParsedContext& b) {
  if (!a.answer || !b.answer) {
    const std::string& id = !a.answer ? a.id : b.id;
    throw ValidationError("context \"" + id +
                          "\" has no answer; irrelevant contexts cannot be "
                          "classified");
  }
  PairView view;
  view.both_present = a.descriptor.has_value() && b.descriptor.has_value();
  if (a.descriptor.has_value() != b.descriptor.has_value()) {
    view.same_descriptor = false;
  } else if (!a.descriptor) {
    view.same_descriptor = true;  // both absent
  } else {
    view.same_descriptor = normalized_equal(*a.descriptor, *b.descriptor);
  }
  view.same_answer = normalized_equal(*a.answer, *b.answer);
  return view;
}

}  // namespace

TaxonomyLabel classify_taxonomy(const ParsedContext& a,
                                const ParsedContext& b) {
  const PairView view = view_pair(a, b);
  if (view.same_descriptor) {
    return view.same_answer ? TaxonomyLabel::Duplicated
                            : TaxonomyLabel::Counterfactual;
  }
  return view.both_present ? TaxonomyLabel::Distracting
                           : TaxonomyLabel::Ambiguous;
}

Relation classify_graph_relation(const ParsedContext& a,
                                 const ParsedContext& b) {
  const PairView view = view_pair(a, b);
  if (view.same_descriptor) {
    return view.same_answer ? Relation::Duplicated : Relation::Counterfactual;
  }
  if (view.both_present) {
    return Relation::Distracting;
  }
  return view.same_answer ? Relation::Ambiguous : Relation::None;
}

Relation RuleOracle::classify(const ParsedContext& pivot,
                              const ParsedContext& other,
                              const Question& /*question*/) {
  return classify_graph_relation(pivot, other);
}

}  // namespace corg

#include "corg/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace corg {

BuilderMode builder_mode_from_string(std::string_view name) {
  if (name == "sound") return BuilderMode::Sound;
  if (name == "literal") return BuilderMode::PaperLiteral;
  throw ConfigError("unknown builder mode \"" + std::string(name) +
                    "\" (expected sound|literal)");
}

std::string_view to_string(BuilderMode mode) {
  return mode == BuilderMode::Sound ? "sound" : "literal";
}

CompositionResult compose_relation(Relation r_ip, Relation r_pj,
                                   bool pivot_has_descriptor) {
  using R = Relation;
  auto det = [](R r) { return CompositionResult{r, {}}; };
  auto und = [](std::vector<R> cands) {
    return CompositionResult{std::nullopt, std::move(cands)};
  };

  // The table is symmetric in its two relation arguments.
  R lo = r_ip;
  R hi = r_pj;
  if (static_cast<int>(lo) > static_cast<int>(hi)) {
    std::swap(lo, hi);
  }

  switch (lo) {
    case R::Duplicated:
      // A duplicate is interchangeable with the pivot.
      return det(hi);
    case R::Counterfactual:
      switch (hi) {
        case R::Counterfactual:
          return und({R::Duplicated, R::Counterfactual});
        case R::Distracting:
          return det(R::Distracting);
        case R::Ambiguous:
          return det(R::None);
        default:  // None
          return und({R::Ambiguous, R::None});
      }
    case R::Distracting:
      switch (hi) {
        case R::Distracting:
          return und({R::Duplicated, R::Counterfactual, R::Distracting});
        default:  // Ambiguous or None
          return und({R::Ambiguous, R::None});
      }
    case R::Ambiguous:
      switch (hi) {
        case R::Ambiguous:
          // Pivot holds the descriptor: both neighbours are the bare form
          // with the pivot's answer.
          return pivot_has_descriptor
                     ? det(R::Duplicated)
                     : und({R::Duplicated, R::Distracting});
        default:  // None
          return pivot_has_descriptor
                     ? det(R::Counterfactual)
                     : und({R::Counterfactual, R::Distracting});
      }
    default:  // (None, None)
      // With a bare pivot both neighbours carry descriptors, which rules
      // out the one-sided labels.
      return pivot_has_descriptor
                 ? und({R::Duplicated, R::Counterfactual})
                 : und({R::Duplicated, R::Counterfactual, R::Distracting});
  }
}

namespace {

void validate_contexts(const std::vector<ParsedContext>& contexts) {
  if (contexts.empty()) {
    throw ValidationError("graph construction needs at least one context");
  }
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    for (std::size_t j = i + 1; j < contexts.size(); ++j) {
      if (contexts[i].id == contexts[j].id) {
        throw ValidationError("duplicate context id \"" + contexts[i].id +
                              "\"");
      }
    }
  }
}

std::vector<std::string> context_ids(const std::vector<ParsedContext>& contexts) {
  std::vector<std::string> ids;
  ids.reserve(contexts.size());
  for (const ParsedContext& ctx : contexts) {
    ids.push_back(ctx.id);
  }
  return ids;
}

/// Dense working view over the relation matrix, indexed by context position.
class EdgeMatrix {
 public:
  explicit EdgeMatrix(std::size_t n) : n_(n), cells_(n * n) {}

  std::optional<Relation> get(std::size_t a, std::size_t b) const {
    return cells_[a * n_ + b];
  }

  void set(std::size_t a, std::size_t b, Relation r) {
    cells_[a * n_ + b] = r;
    cells_[b * n_ + a] = r;
  }

  bool complete_row(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b) {
      if (b != a && !cells_[a * n_ + b]) {
        return false;
      }
    }
    return true;
  }

 private:
  std::size_t n_;
  std::vector<std::optional<Relation>> cells_;
};

}  // namespace

ContextGraph build_graph_naive(const std::vector<ParsedContext>& contexts,
                               const Question& question,
                               RelationOracle& oracle) {
  validate_contexts(contexts);
  ContextGraph graph(context_ids(contexts));
  std::size_t calls = 0;
  for (std::size_t i = 0; i < contexts.size(); ++i) {
    for (std::size_t j = i + 1; j < contexts.size(); ++j) {
      graph.set_edge(contexts[i].id, contexts[j].id,
                     oracle.classify(contexts[i], contexts[j], question));
      ++calls;
    }
  }
  graph.set_call_count(calls);
  return graph;
}

ContextGraph build_graph_corg(const std::vector<ParsedContext>& contexts,
                              const Question& question, RelationOracle& oracle,
                              BuilderMode mode) {
  validate_contexts(contexts);
  const std::size_t n = contexts.size();
  EdgeMatrix matrix(n);
  std::size_t calls = 0;

  std::vector<bool> has_desc(n);
  for (std::size_t i = 0; i < n; ++i) {
    has_desc[i] = oracle.has_descriptor(contexts[i]);
  }

  // Propagate forced labels from a batch of fresh edges to a fixed point.
  auto close_over = [&](std::deque<std::pair<std::size_t, std::size_t>> fresh) {
    while (!fresh.empty()) {
      const auto [a, b] = fresh.front();
      fresh.pop_front();
      const Relation rab = *matrix.get(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) {
          continue;
        }
        // Middle b: (a, b) + (b, c) forces (a, c).
        if (auto rbc = matrix.get(b, c); rbc && !matrix.get(a, c)) {
          const CompositionResult res = compose_relation(rab, *rbc, has_desc[b]);
          if (res.is_determined()) {
            matrix.set(a, c, *res.determined);
            fresh.emplace_back(a, c);
          }
        }
        // Middle a: (c, a) + (a, b) forces (c, b).
        if (auto rca = matrix.get(c, a); rca && !matrix.get(c, b)) {
          const CompositionResult res = compose_relation(*rca, rab, has_desc[a]);
          if (res.is_determined()) {
            matrix.set(c, b, *res.determined);
            fresh.emplace_back(c, b);
          }
        }
      }
    }
  };

  // Literal mirroring across the freshly queried (pivot, fresh) edge; only
  // fills cells the calculus left open.
  auto mirror = [&](std::size_t pivot, std::size_t fresh_node, Relation r) {
    std::deque<std::pair<std::size_t, std::size_t>> added;
    const bool copy_all =
        r == Relation::Counterfactual || r == Relation::Duplicated;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == pivot || j == fresh_node) {
        continue;
      }
      const auto rpj = matrix.get(pivot, j);
      if (!rpj || matrix.get(fresh_node, j)) {
        continue;
      }
      if (copy_all) {
        matrix.set(fresh_node, j, *rpj);
        added.emplace_back(fresh_node, j);
      } else if (*rpj == Relation::Counterfactual ||
                 *rpj == Relation::Duplicated) {
        matrix.set(fresh_node, j, r);
        added.emplace_back(fresh_node, j);
      }
    }
    close_over(std::move(added));
  };

  std::vector<std::size_t> frontier(n);
  std::iota(frontier.begin(), frontier.end(), 0);

  while (frontier.size() > 1) {
    const std::size_t pivot = frontier.front();
    for (std::size_t idx = 1; idx < frontier.size(); ++idx) {
      const std::size_t other = frontier[idx];
      if (matrix.get(pivot, other)) {
        continue;
      }
      const Relation r =
          oracle.classify(contexts[pivot], contexts[other], question);
      ++calls;
      matrix.set(pivot, other, r);
      close_over({{pivot, other}});
      if (mode == BuilderMode::PaperLiteral) {
        mirror(pivot, other, r);
      }
    }
    std::vector<std::size_t> next;
    for (std::size_t idx = 1; idx < frontier.size(); ++idx) {
      if (!matrix.complete_row(frontier[idx])) {
        next.push_back(frontier[idx]);
      }
    }
    frontier = std::move(next);
  }

  ContextGraph graph(context_ids(contexts));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      graph.set_edge(contexts[i].id, contexts[j].id, *matrix.get(i, j));
    }
  }
  graph.set_call_count(calls);
  return graph;
}

}  // namespace corg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "corg/types.hpp"

namespace corg::testing {

inline ParsedContext make_context(std::string id,
                                  std::optional<std::string> descriptor,
                                  std::optional<std::string> answer,
                                  std::string surface =
                                      "2019 World Ice Hockey Championships") {
  ParsedContext ctx;
  ctx.id = std::move(id);
  ctx.surface = std::move(surface);
  ctx.title = ctx.surface;
  ctx.descriptor = std::move(descriptor);
  ctx.answer = std::move(answer);
  ctx.body = "The " + ctx.surface +
             (ctx.descriptor ? " (" + *ctx.descriptor + ")" : "") +
             " were hosted by " + (ctx.answer ? *ctx.answer : "nobody") + ".";
  return ctx;
}

inline Question hockey_question() {
  Question q;
  q.text = "2019 World Ice Hockey Championships host country?";
  q.entity = "2019 World Ice Hockey Championships";
  return q;
}

/// The worked five-context example: a described main context, its
/// duplicate, a conflicting described context, a distracting one, and a
/// bare interchangeable twin of the main context.
inline std::vector<ParsedContext> hockey_contexts() {
  return {
      make_context("c0", "IIHF", "Slovakia"),
      make_context("c1", "IIHF", "Slovakia"),
      make_context("c2", "IIHF", "Canada and British Columbia"),
      make_context("c3", "junior", "Vancouver and Victoria"),
      make_context("c4", std::nullopt, "Slovakia"),
  };
}

}  // namespace corg::testing

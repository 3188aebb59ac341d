#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "corg/oracle.hpp"
#include "corg/types.hpp"

#include "fixtures.hpp"

namespace corg::testing {

/// Abstract triple: descriptor slot 0 means absent, answers are symbolic.
struct TripleShape {
  int descriptor;  // 0 = absent, 1..3 = distinct values
  int answer;      // 1..3 = distinct values
};

inline ParsedContext realize(const std::string& id, const TripleShape& shape) {
  std::optional<std::string> descriptor;
  if (shape.descriptor != 0) {
    descriptor = "descriptor " + std::to_string(shape.descriptor);
  }
  return make_context(id, descriptor,
                      "answer " + std::to_string(shape.answer));
}

/// Every (i, pivot, j) assignment over small symbol universes, bucketed by
/// (relation(i,p), relation(p,j), pivot has descriptor). The resulting
/// relation(i,j) sets are the ground truth for the composition table.
struct WitnessTable {
  // key: r_ip * 10 + r_pj, with pivot descriptor flag
  std::set<Relation> observed[5][5][2];

  WitnessTable() {
    std::vector<TripleShape> shapes;
    for (int d = 0; d <= 3; ++d) {
      for (int a = 1; a <= 3; ++a) {
        shapes.push_back({d, a});
      }
    }
    for (const TripleShape& i : shapes) {
      for (const TripleShape& p : shapes) {
        for (const TripleShape& j : shapes) {
          const ParsedContext ci = realize("i", i);
          const ParsedContext cp = realize("p", p);
          const ParsedContext cj = realize("j", j);
          const Relation r_ip = classify_graph_relation(ci, cp);
          const Relation r_pj = classify_graph_relation(cp, cj);
          const Relation r_ij = classify_graph_relation(ci, cj);
          observed[static_cast<int>(r_ip)][static_cast<int>(r_pj)]
                  [p.descriptor != 0 ? 1 : 0]
                      .insert(r_ij);
        }
      }
    }
  }
};

}  // namespace corg::testing

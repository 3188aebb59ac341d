#pragma once

#include <cstdint>
#include <vector>

#include "corg/types.hpp"

namespace corg {

/// Shape of a generated benchmark corpus. Each question gets
/// descriptors_per_entity * conflicts_per_descriptor described base
/// contexts (pairwise counterfactual within a descriptor, distracting
/// across descriptors), `duplicates_per_context` copies of every base,
/// bare interchangeable twins for a fraction of the bases, and bare
/// filler contexts with fresh answers.
struct SynthSpec {
  std::uint64_t seed = 0;
  std::size_t questions = 1;
  std::size_t descriptors_per_entity = 2;   // k
  std::size_t conflicts_per_descriptor = 2; // m
  std::size_t duplicates_per_context = 0;
  double ambiguous_fraction = 0.0;
  double none_fraction = 0.0;
};

void validate_spec(const SynthSpec& spec);

/// Deterministic for a fixed spec; contexts are emitted bases first, then
/// duplicates, twins, and fillers, with ids "c0", "c1", ... in creation
/// order. gold_relation holds each context's intended relation to c0.
std::vector<CorpusRecord> synth_corpus(const SynthSpec& spec);

}  // namespace corg

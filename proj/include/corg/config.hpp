#pragma once

#include <string>

#include "corg/baselines.hpp"
#include "corg/graph.hpp"
#include "corg/llm.hpp"
#include "corg/rerank.hpp"
#include "corg/synth.hpp"

namespace corg {

/// Umbrella configuration; every CLI flag has a counterpart here so runs
/// can be pinned in one JSON file.
struct AppConfig {
  std::string oracle = "rules";     // rules | llm
  std::string generator = "mock";   // mock | llm
  BuilderMode mode = BuilderMode::Sound;
  LlmClientConfig llm;
  RerankConfig rerank;
  SynthSpec synth;
  std::size_t retrieve_top_k = 5;
  double flops_parameter_count = 7e9;
};

AppConfig load_config(const std::string& path);

}  // namespace corg

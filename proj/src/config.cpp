#include "corg/config.hpp"

#include <fstream>

#include <json.hpp>

namespace corg {

AppConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file \"" + path + "\"");
  }
  nlohmann::json value;
  try {
    value = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ConfigError("invalid JSON in \"" + path + "\": " + err.what());
  }

  AppConfig config;
  config.oracle = value.value("oracle", config.oracle);
  config.generator = value.value("generator", config.generator);
  if (value.contains("mode")) {
    config.mode = builder_mode_from_string(value["mode"].get<std::string>());
  }
  if (value.contains("llm")) {
    const auto& llm = value["llm"];
    config.llm.base_url = llm.value("base_url", config.llm.base_url);
    config.llm.model = llm.value("model", config.llm.model);
    config.llm.api_key = llm.value("api_key", config.llm.api_key);
    config.llm.temperature = llm.value("temperature", config.llm.temperature);
    config.llm.max_retries = llm.value("max_retries", config.llm.max_retries);
  }
  if (value.contains("rerank")) {
    const auto& rerank = value["rerank"];
    config.rerank.seed = rerank.value("seed", config.rerank.seed);
    if (rerank.contains("plural_overrides")) {
      for (const auto& [word, plural] :
           rerank["plural_overrides"].items()) {
        config.rerank.plural_overrides[word] = plural.get<std::string>();
      }
    }
  }
  if (value.contains("synth")) {
    const auto& synth = value["synth"];
    config.synth.seed = synth.value("seed", config.synth.seed);
    config.synth.questions = synth.value("questions", config.synth.questions);
    config.synth.descriptors_per_entity =
        synth.value("descriptors_per_entity", config.synth.descriptors_per_entity);
    config.synth.conflicts_per_descriptor =
        synth.value("conflicts_per_descriptor",
                    config.synth.conflicts_per_descriptor);
    config.synth.duplicates_per_context =
        synth.value("duplicates_per_context",
                    config.synth.duplicates_per_context);
    config.synth.ambiguous_fraction =
        synth.value("ambiguous_fraction", config.synth.ambiguous_fraction);
    config.synth.none_fraction =
        synth.value("none_fraction", config.synth.none_fraction);
  }
  config.retrieve_top_k = value.value("retrieve_top_k", config.retrieve_top_k);
  config.flops_parameter_count =
      value.value("flops_parameter_count", config.flops_parameter_count);
  return config;
}

}  // namespace corg

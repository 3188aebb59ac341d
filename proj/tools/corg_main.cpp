#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>

#include "corg/aggregate.hpp"
#include "corg/baselines.hpp"
#include "corg/config.hpp"
#include "corg/corpus_io.hpp"
#include "corg/eval.hpp"
#include "corg/expand.hpp"
#include "corg/graph.hpp"
#include "corg/llm_backends.hpp"
#include "corg/serialize.hpp"
#include "corg/synth.hpp"

namespace {

struct GlobalOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool verbose = false;
};

corg::AppConfig resolve_config(const GlobalOptions& global) {
  corg::AppConfig config;
  if (!global.config_path.empty()) {
    config = corg::load_config(global.config_path);
  }
  config.llm = corg::llm_config_from_env(config.llm);
  if (global.seed_set) {
    config.rerank.seed = global.seed;
    config.synth.seed = global.seed;
  }
  return config;
}

std::unique_ptr<corg::LlmClient> make_llm_client(const corg::AppConfig& config) {
  return std::make_unique<corg::LlmClient>(
      std::make_shared<corg::HttpChatTransport>(config.llm), config.llm);
}

struct OracleBundle {
  std::unique_ptr<corg::LlmClient> client;
  std::unique_ptr<corg::RelationOracle> oracle;
};

OracleBundle make_oracle(const std::string& kind,
                         const corg::AppConfig& config) {
  OracleBundle bundle;
  if (kind == "rules") {
    bundle.oracle = std::make_unique<corg::RuleOracle>();
  } else if (kind == "llm") {
    bundle.client = make_llm_client(config);
    bundle.oracle = std::make_unique<corg::LlmRelationOracle>(*bundle.client);
  } else {
    throw corg::ConfigError("unknown oracle \"" + kind +
                            "\" (expected rules|llm)");
  }
  return bundle;
}

struct GeneratorBundle {
  std::unique_ptr<corg::LlmClient> client;
  std::unique_ptr<corg::Generator> generator;
};

GeneratorBundle make_generator(const std::string& kind,
                               const corg::AppConfig& config) {
  GeneratorBundle bundle;
  if (kind == "mock") {
    bundle.generator = std::make_unique<corg::MockGenerator>();
  } else if (kind == "llm") {
    bundle.client = make_llm_client(config);
    bundle.generator = std::make_unique<corg::LlmGenerator>(*bundle.client);
  } else {
    throw corg::ConfigError("unknown generator \"" + kind +
                            "\" (expected mock|llm)");
  }
  return bundle;
}

void log_verbose(const GlobalOptions& global, const std::string& message) {
  if (global.verbose) {
    std::cerr << message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Context organization pipeline for multi-document QA"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--config", global.config_path, "JSON configuration file");
  app.add_option("--seed", global.seed, "Seed override for RNG-driven steps")
      ->each([&global](const std::string&) { global.seed_set = true; });
  app.add_flag("--verbose", global.verbose, "Log progress to stderr");

  // synth
  auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic corpus");
  std::string synth_out = "corpus.jsonl";
  corg::SynthSpec synth_flags;
  bool synth_flags_used = false;
  synth_cmd->add_option("--out", synth_out, "Output corpus path");
  synth_cmd->add_option("--questions", synth_flags.questions, "Record count")
      ->each([&](const std::string&) { synth_flags_used = true; });
  synth_cmd
      ->add_option("--descriptors", synth_flags.descriptors_per_entity,
                   "Descriptors per entity (k)")
      ->each([&](const std::string&) { synth_flags_used = true; });
  synth_cmd
      ->add_option("--conflicts", synth_flags.conflicts_per_descriptor,
                   "Conflicting answers per descriptor (m)")
      ->each([&](const std::string&) { synth_flags_used = true; });
  synth_cmd
      ->add_option("--duplicates", synth_flags.duplicates_per_context,
                   "Copies per base context")
      ->each([&](const std::string&) { synth_flags_used = true; });
  synth_cmd
      ->add_option("--ambiguous-fraction", synth_flags.ambiguous_fraction,
                   "Bare interchangeable twins per base context")
      ->each([&](const std::string&) { synth_flags_used = true; });
  synth_cmd
      ->add_option("--none-fraction", synth_flags.none_fraction,
                   "Bare fresh-answer fillers per base context")
      ->each([&](const std::string&) { synth_flags_used = true; });

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "Build relation graphs");
  std::string graph_input;
  std::string graph_mode = "sound";
  std::string graph_oracle = "rules";
  std::string graph_out = "graph.json";
  graph_cmd->add_option("--input", graph_input, "Corpus path")->required();
  graph_cmd->add_option("--mode", graph_mode, "sound|literal");
  graph_cmd->add_option("--oracle", graph_oracle, "rules|llm");
  graph_cmd->add_option("--out", graph_out, "Output graph file");

  // rerank
  auto* rerank_cmd = app.add_subcommand("rerank", "Plan context groups");
  std::string rerank_graph;
  std::string rerank_input;
  std::string rerank_out = "plan.json";
  rerank_cmd->add_option("--graph", rerank_graph, "Graph file")->required();
  rerank_cmd->add_option("--input", rerank_input, "Corpus path")->required();
  rerank_cmd->add_option("--out", rerank_out, "Output plan file");

  // run
  auto* run_cmd = app.add_subcommand("run", "Run the full pipeline");
  std::string run_input;
  std::string run_oracle = "rules";
  std::string run_generator = "mock";
  std::string run_out = "responses.jsonl";
  run_cmd->add_option("--input", run_input, "Corpus path")->required();
  run_cmd->add_option("--oracle", run_oracle, "rules|llm");
  run_cmd->add_option("--generator", run_generator, "mock|llm");
  run_cmd->add_option("--out", run_out, "Output responses path");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Score stored responses");
  std::string eval_responses;
  std::string eval_input;
  std::string eval_out = "report.json";
  eval_cmd->add_option("--responses", eval_responses, "Responses path")
      ->required();
  eval_cmd->add_option("--input", eval_input, "Corpus path")->required();
  eval_cmd->add_option("--out", eval_out, "Output report path");

  // stats
  auto* stats_cmd = app.add_subcommand("stats", "Corpus composition stats");
  std::string stats_input;
  std::string stats_graphs;
  std::string stats_out = "stats.json";
  stats_cmd->add_option("--input", stats_input, "Corpus path")->required();
  stats_cmd->add_option("--graphs", stats_graphs,
                        "Graph file or directory (built on the fly when "
                        "omitted)");
  stats_cmd->add_option("--out", stats_out, "Output stats path");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Compare methods");
  std::string bench_input;
  std::string bench_methods = "base,random,kmeans,corg,separate";
  std::string bench_generator = "mock";
  std::string bench_oracle = "rules";
  std::string bench_out = "bench.json";
  bench_cmd->add_option("--input", bench_input, "Corpus path")->required();
  bench_cmd->add_option("--methods", bench_methods, "Comma-separated methods");
  bench_cmd->add_option("--oracle", bench_oracle, "rules|llm");
  bench_cmd->add_option("--generator", bench_generator, "mock|llm");
  bench_cmd->add_option("--out", bench_out, "Output table path");

  // expand
  auto* expand_cmd =
      app.add_subcommand("expand", "Grow records with generated contexts");
  std::string expand_input;
  std::string expand_out = "expanded.jsonl";
  int expand_retry_cap = 3;
  bool expand_answer_check = false;
  expand_cmd->add_option("--input", expand_input, "Corpus path")->required();
  expand_cmd->add_option("--out", expand_out, "Output corpus path");
  expand_cmd->add_option("--retry-cap", expand_retry_cap,
                         "Regeneration attempts per target");
  expand_cmd->add_flag("--answer-check", expand_answer_check,
                       "Also require the model to answer from the context");

  CLI11_PARSE(app, argc, argv);

  try {
    const corg::AppConfig config = resolve_config(global);

    if (synth_cmd->parsed()) {
      corg::SynthSpec spec = synth_flags_used ? synth_flags : config.synth;
      if (global.seed_set) {
        spec.seed = global.seed;
      } else if (synth_flags_used) {
        spec.seed = config.synth.seed;
      }
      const auto records = corg::synth_corpus(spec);
      corg::save_corpus(records, synth_out);
      log_verbose(global, "wrote " + std::to_string(records.size()) +
                              " records to " + synth_out);
    } else if (graph_cmd->parsed()) {
      const auto records = corg::load_corpus(graph_input);
      auto bundle = make_oracle(graph_oracle, config);
      const corg::BuilderMode mode = corg::builder_mode_from_string(graph_mode);
      std::vector<std::pair<std::string, corg::ContextGraph>> graphs;
      for (const corg::CorpusRecord& record : records) {
        const auto relevant = corg::relevant_contexts(record);
        if (relevant.empty()) {
          throw corg::ValidationError("record \"" + record.id +
                                      "\" has no relevant contexts");
        }
        graphs.emplace_back(record.id,
                            corg::build_graph_corg(relevant, record.question,
                                                   *bundle.oracle, mode));
      }
      corg::save_graphs(graphs, graph_out);
      log_verbose(global, "wrote " + std::to_string(graphs.size()) +
                              " graphs to " + graph_out);
    } else if (rerank_cmd->parsed()) {
      const auto records = corg::load_corpus(rerank_input);
      const auto graphs = corg::load_graphs(rerank_graph);
      std::vector<std::pair<std::string, corg::GroupPlan>> plans;
      for (const corg::CorpusRecord& record : records) {
        const corg::ContextGraph* graph = nullptr;
        for (const auto& [record_id, candidate] : graphs) {
          if (record_id == record.id) {
            graph = &candidate;
            break;
          }
        }
        if (graph == nullptr) {
          throw corg::ValidationError("no graph for record \"" + record.id +
                                      "\"");
        }
        const auto relevant = corg::relevant_contexts(record);
        plans.emplace_back(record.id,
                           corg::plan_groups(*graph, relevant, record.question,
                                             config.rerank));
      }
      corg::save_plans(plans, rerank_out);
    } else if (run_cmd->parsed()) {
      const auto records = corg::load_corpus(run_input);
      auto oracle = make_oracle(run_oracle, config);
      auto generator = make_generator(run_generator, config);
      corg::PipelineConfig pipeline_config;
      pipeline_config.mode = config.mode;
      pipeline_config.rerank = config.rerank;
      std::vector<corg::StoredResponse> responses;
      for (const corg::CorpusRecord& record : records) {
        const corg::PipelineResult result = corg::run_pipeline(
            record, *oracle.oracle, *generator.generator, pipeline_config);
        responses.push_back({record.id, result.response, result.trace});
      }
      corg::save_responses(responses, run_out);
      log_verbose(global, "wrote " + std::to_string(responses.size()) +
                              " responses to " + run_out);
    } else if (eval_cmd->parsed()) {
      const auto records = corg::load_corpus(eval_input);
      const auto responses = corg::load_responses(eval_responses);
      std::map<std::string, std::string> rendered;
      for (const corg::StoredResponse& stored : responses) {
        rendered[stored.record_id] = stored.response.rendered;
      }
      corg::StructuredLineExtractor extractor;
      const corg::MetricReport report =
          corg::evaluate_responses(records, rendered, extractor);
      corg::write_json_file(corg::report_to_json(report), eval_out);
      std::cout << "ent " << report.mean.ent << "  ans " << report.mean.ans
                << "  ear " << report.mean.ear << "  d_f1 "
                << report.mean.d_f1 << "\n";
    } else if (stats_cmd->parsed()) {
      const auto records = corg::load_corpus(stats_input);
      std::vector<corg::ContextGraph> graphs;
      if (!stats_graphs.empty()) {
        auto stored = corg::load_graphs(stats_graphs);
        for (const corg::CorpusRecord& record : records) {
          bool found = false;
          for (auto& [record_id, graph] : stored) {
            if (record_id == record.id) {
              graphs.push_back(graph);
              found = true;
              break;
            }
          }
          if (!found) {
            throw corg::ValidationError("no graph for record \"" + record.id +
                                        "\"");
          }
        }
      } else {
        corg::RuleOracle oracle;
        for (const corg::CorpusRecord& record : records) {
          const auto relevant = corg::relevant_contexts(record);
          graphs.push_back(relevant.empty()
                               ? corg::ContextGraph(std::vector<std::string>{})
                               : corg::build_graph_corg(relevant,
                                                        record.question,
                                                        oracle));
        }
      }
      const corg::CompositionStats stats = corg::corpus_stats(records, graphs);
      corg::write_json_file(corg::stats_to_json(stats), stats_out);
      std::cout << "ambiguous " << stats.ambiguous << "  distracting "
                << stats.distracting << "  counterfactual "
                << stats.counterfactual << "  duplicated " << stats.duplicated
                << "  coverage " << stats.coverage << "\n";
    } else if (bench_cmd->parsed()) {
      const auto records = corg::load_corpus(bench_input);
      auto oracle = make_oracle(bench_oracle, config);
      auto generator = make_generator(bench_generator, config);
      std::vector<corg::MethodId> methods;
      std::stringstream methods_stream(bench_methods);
      std::string method_name;
      while (std::getline(methods_stream, method_name, ',')) {
        if (!method_name.empty()) {
          methods.push_back(corg::method_from_string(method_name));
        }
      }
      corg::HashedNgramEmbedder embedder;
      corg::IdOrderRanker ranker;
      corg::LeadingSentenceSummarizer summarizer;
      corg::Providers providers{&embedder, &ranker, &summarizer};
      corg::BaselineConfig baseline_config;
      baseline_config.mode = config.mode;
      baseline_config.rerank = config.rerank;
      baseline_config.retrieve_top_k = config.retrieve_top_k;
      corg::StructuredLineExtractor extractor;
      const auto rows =
          corg::compare_methods(records, methods, *oracle.oracle,
                                *generator.generator, providers,
                                baseline_config, extractor);
      corg::write_json_file(corg::bench_to_json(rows), bench_out);
      std::cout << "method      ent     ans     ear     d_f1    in_tok  "
                   "out_tok runs\n";
      for (const corg::BenchRow& row : rows) {
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(3);
        line << to_string(row.method);
        for (std::size_t pad = line.str().size(); pad < 12; ++pad) {
          line << ' ';
        }
        line << row.metrics.ent << "   " << row.metrics.ans << "   "
             << row.metrics.ear << "   " << row.metrics.d_f1 << "   "
             << row.mean_input_tokens << "  " << row.mean_output_tokens
             << "  " << row.mean_runs;
        std::cout << line.str() << "\n";
      }
    } else if (expand_cmd->parsed()) {
      const auto records = corg::load_corpus(expand_input);
      auto client = make_llm_client(config);
      corg::ExpandOptions options;
      options.seed = global.seed_set ? global.seed : config.synth.seed;
      options.retry_cap = expand_retry_cap;
      options.answer_check = expand_answer_check;
      const corg::ExpandResult result =
          corg::expand_corpus(records, *client, options);
      corg::save_corpus(result.records, expand_out);
      for (const corg::ExpandIssue& issue : result.issues) {
        std::cerr << "record " << issue.record_id << ": target \""
                  << issue.target << "\" flagged: " << issue.detail << "\n";
      }
      log_verbose(global, "wrote " + std::to_string(result.records.size()) +
                              " records to " + expand_out);
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}

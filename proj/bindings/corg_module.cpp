#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "corg/aggregate.hpp"
#include "corg/baselines.hpp"
#include "corg/corpus_io.hpp"
#include "corg/eval.hpp"
#include "corg/graph.hpp"
#include "corg/oracle.hpp"
#include "corg/rerank.hpp"
#include "corg/synth.hpp"
#include "corg/text.hpp"

namespace py = pybind11;

namespace {

corg::ContextGraph build_graph(const std::vector<corg::ParsedContext>& contexts,
                               const corg::Question& question,
                               const std::string& mode, bool naive) {
  corg::RuleOracle oracle;
  if (naive) {
    return corg::build_graph_naive(contexts, question, oracle);
  }
  return corg::build_graph_corg(contexts, question, oracle,
                                corg::builder_mode_from_string(mode));
}

corg::PipelineResult run_pipeline_mock(const corg::CorpusRecord& record,
                                       std::uint64_t seed,
                                       const std::string& mode) {
  corg::RuleOracle oracle;
  corg::MockGenerator generator;
  corg::PipelineConfig config;
  config.mode = corg::builder_mode_from_string(mode);
  config.rerank.seed = seed;
  return corg::run_pipeline(record, oracle, generator, config);
}

corg::PipelineResult run_baseline_mock(const std::string& method,
                                       const corg::CorpusRecord& record,
                                       std::uint64_t seed) {
  corg::RuleOracle oracle;
  corg::MockGenerator generator;
  corg::HashedNgramEmbedder embedder;
  corg::IdOrderRanker ranker;
  corg::LeadingSentenceSummarizer summarizer;
  corg::Providers providers{&embedder, &ranker, &summarizer};
  corg::BaselineConfig config;
  config.rerank.seed = seed;
  return corg::run_baseline(corg::method_from_string(method), record, oracle,
                            generator, providers, config);
}

double disambig_f1_structured(const corg::Question& question,
                              const std::string& response) {
  corg::StructuredLineExtractor extractor;
  return corg::disambig_f1(question, response, extractor);
}

}  // namespace

PYBIND11_MODULE(_corg, m) {
  m.doc() = "Context organization pipeline for multi-document QA";

  py::register_exception<corg::ParseError>(m, "CorgParseError");
  py::register_exception<corg::ValidationError>(m, "CorgValidationError");
  py::register_exception<corg::ConfigError>(m, "CorgConfigError");

  py::enum_<corg::Relation>(m, "Relation")
      .value("Duplicated", corg::Relation::Duplicated)
      .value("Counterfactual", corg::Relation::Counterfactual)
      .value("Distracting", corg::Relation::Distracting)
      .value("Ambiguous", corg::Relation::Ambiguous)
      .value("NoRelation", corg::Relation::None);

  py::class_<corg::ParsedContext>(m, "ParsedContext")
      .def(py::init<>())
      .def_readwrite("id", &corg::ParsedContext::id)
      .def_readwrite("title", &corg::ParsedContext::title)
      .def_readwrite("body", &corg::ParsedContext::body)
      .def_readwrite("surface", &corg::ParsedContext::surface)
      .def_readwrite("descriptor", &corg::ParsedContext::descriptor)
      .def_readwrite("answer", &corg::ParsedContext::answer)
      .def_readwrite("gold_relation", &corg::ParsedContext::gold_relation);

  py::class_<corg::SubQuestion>(m, "SubQuestion")
      .def(py::init<>())
      .def_readwrite("descriptor", &corg::SubQuestion::descriptor)
      .def_readwrite("answers", &corg::SubQuestion::answers);

  py::class_<corg::Question>(m, "Question")
      .def(py::init<>())
      .def_readwrite("text", &corg::Question::text)
      .def_readwrite("entity", &corg::Question::entity)
      .def_readwrite("descriptor", &corg::Question::descriptor)
      .def_readwrite("sub_questions", &corg::Question::sub_questions);

  py::class_<corg::CorpusRecord>(m, "CorpusRecord")
      .def(py::init<>())
      .def_readwrite("id", &corg::CorpusRecord::id)
      .def_readwrite("question", &corg::CorpusRecord::question)
      .def_readwrite("contexts", &corg::CorpusRecord::contexts)
      .def("gold_pairs", &corg::CorpusRecord::gold_pairs)
      .def("gold_answers", &corg::CorpusRecord::gold_answers)
      .def("gold_descriptors", &corg::CorpusRecord::gold_descriptors);

  py::class_<corg::ContextGraph>(m, "ContextGraph")
      .def("nodes", &corg::ContextGraph::nodes)
      .def("edge",
           [](const corg::ContextGraph& graph, const std::string& a,
              const std::string& b) { return graph.edge(a, b); })
      .def("edges",
           [](const corg::ContextGraph& graph) {
             std::vector<std::tuple<std::string, std::string, corg::Relation>>
                 out;
             for (const auto& [key, relation] : graph.edges()) {
               out.emplace_back(key.first, key.second, relation);
             }
             return out;
           })
      .def("call_count", &corg::ContextGraph::call_count)
      .def("fully_connected", &corg::ContextGraph::fully_connected);

  py::class_<corg::Removal>(m, "Removal")
      .def_property_readonly("id",
                             [](const corg::Removal& r) { return r.id; })
      .def_property_readonly("reason", [](const corg::Removal& r) {
        return std::string(corg::to_string(r.reason));
      });

  py::class_<corg::GroupPlan>(m, "GroupPlan")
      .def_readonly("groups", &corg::GroupPlan::groups)
      .def_readonly("group_question", &corg::GroupPlan::group_question)
      .def_readonly("removed", &corg::GroupPlan::removed);

  py::class_<corg::ResponseEntry>(m, "ResponseEntry")
      .def_readonly("answer", &corg::ResponseEntry::answer)
      .def_readonly("descriptor", &corg::ResponseEntry::descriptor)
      .def_readonly("citations", &corg::ResponseEntry::citations);

  py::class_<corg::AggregateResponse>(m, "AggregateResponse")
      .def_readonly("entries", &corg::AggregateResponse::entries)
      .def_readonly("rendered", &corg::AggregateResponse::rendered);

  py::class_<corg::RunTokens>(m, "RunTokens")
      .def_readonly("input_tokens", &corg::RunTokens::input_tokens)
      .def_readonly("output_tokens", &corg::RunTokens::output_tokens);

  py::class_<corg::RunTrace>(m, "RunTrace")
      .def_readonly("oracle_calls", &corg::RunTrace::oracle_calls)
      .def_readonly("groups", &corg::RunTrace::groups)
      .def_readonly("runs", &corg::RunTrace::runs)
      .def("total_input_tokens", &corg::RunTrace::total_input_tokens)
      .def("total_output_tokens", &corg::RunTrace::total_output_tokens);

  py::class_<corg::PipelineResult>(m, "PipelineResult")
      .def_readonly("response", &corg::PipelineResult::response)
      .def_readonly("trace", &corg::PipelineResult::trace)
      .def_readonly("plan", &corg::PipelineResult::plan)
      .def_readonly("graph", &corg::PipelineResult::graph);

  py::class_<corg::SynthSpec>(m, "SynthSpec")
      .def(py::init<>())
      .def_readwrite("seed", &corg::SynthSpec::seed)
      .def_readwrite("questions", &corg::SynthSpec::questions)
      .def_readwrite("descriptors_per_entity",
                     &corg::SynthSpec::descriptors_per_entity)
      .def_readwrite("conflicts_per_descriptor",
                     &corg::SynthSpec::conflicts_per_descriptor)
      .def_readwrite("duplicates_per_context",
                     &corg::SynthSpec::duplicates_per_context)
      .def_readwrite("ambiguous_fraction", &corg::SynthSpec::ambiguous_fraction)
      .def_readwrite("none_fraction", &corg::SynthSpec::none_fraction);

  m.def("normalize_text", &corg::normalize_text, py::arg("text"));
  m.def("normalize_tokens", &corg::normalize_tokens, py::arg("text"));
  m.def("is_relevant", &corg::is_relevant, py::arg("question"),
        py::arg("context"));
  m.def("classify_taxonomy",
        [](const corg::ParsedContext& a, const corg::ParsedContext& b) {
          return std::string(corg::to_string(corg::classify_taxonomy(a, b)));
        });
  m.def("classify_graph_relation", &corg::classify_graph_relation,
        py::arg("a"), py::arg("b"));
  m.def(
      "compose_relation",
      [](corg::Relation r_ip, corg::Relation r_pj, bool pivot_has_descriptor) {
        const corg::CompositionResult result =
            corg::compose_relation(r_ip, r_pj, pivot_has_descriptor);
        return std::make_pair(result.determined, result.candidates);
      },
      py::arg("r_ip"), py::arg("r_pj"), py::arg("pivot_has_descriptor"));
  m.def("build_graph", &build_graph, py::arg("contexts"), py::arg("question"),
        py::arg("mode") = "sound", py::arg("naive") = false);
  m.def("pluralize_question", &corg::pluralize_question, py::arg("question"),
        py::arg("overrides") = std::map<std::string, std::string>{});
  m.def(
      "plan_groups",
      [](const corg::ContextGraph& graph,
         const std::vector<corg::ParsedContext>& contexts,
         const corg::Question& question, std::uint64_t seed) {
        corg::RerankConfig config;
        config.seed = seed;
        return corg::plan_groups(graph, contexts, question, config);
      },
      py::arg("graph"), py::arg("contexts"), py::arg("question"),
      py::arg("seed") = 0);
  m.def("run_pipeline_mock", &run_pipeline_mock, py::arg("record"),
        py::arg("seed") = 0, py::arg("mode") = "sound");
  m.def("run_baseline_mock", &run_baseline_mock, py::arg("method"),
        py::arg("record"), py::arg("seed") = 0);
  m.def("synth_corpus", &corg::synth_corpus, py::arg("spec"));
  m.def("load_corpus", &corg::load_corpus, py::arg("path"));
  m.def("save_corpus", &corg::save_corpus, py::arg("records"), py::arg("path"));
  m.def("entity_recall", &corg::entity_recall, py::arg("gold_descriptors"),
        py::arg("response"));
  m.def("answer_recall", &corg::answer_recall, py::arg("gold_answers"),
        py::arg("response"));
  m.def("ear", &corg::ear, py::arg("gold_pairs"), py::arg("response"));
  m.def("token_f1", &corg::token_f1, py::arg("predicted"), py::arg("gold"));
  m.def("disambig_f1", &disambig_f1_structured, py::arg("question"),
        py::arg("response"));
}

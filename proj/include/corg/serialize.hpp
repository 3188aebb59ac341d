#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "corg/baselines.hpp"
#include "corg/eval.hpp"
#include "corg/types.hpp"

namespace corg {

/// {"record_id", "nodes", "edges": [{"a", "b", "relation"}], "call_count"}
nlohmann::ordered_json graph_to_json(const std::string& record_id,
                                     const ContextGraph& graph);
ContextGraph graph_from_json(const nlohmann::ordered_json& value);
std::string graph_record_id(const nlohmann::ordered_json& value);

void save_graphs(const std::vector<std::pair<std::string, ContextGraph>>& graphs,
                 const std::string& path);
/// Accepts a single file (object or array) or a directory of *.json files.
std::vector<std::pair<std::string, ContextGraph>> load_graphs(
    const std::string& path);

nlohmann::ordered_json plan_to_json(const std::string& record_id,
                                    const GroupPlan& plan);
void save_plans(const std::vector<std::pair<std::string, GroupPlan>>& plans,
                const std::string& path);

/// One line per record:
/// {"record_id", "entries": [{"answer", "descriptor", "citations"}],
///  "trace": {"oracle_calls", "groups",
///            "runs": [{"input_tokens", "output_tokens"}]}}
nlohmann::ordered_json response_to_json(const std::string& record_id,
                                        const AggregateResponse& response,
                                        const RunTrace& trace);
struct StoredResponse {
  std::string record_id;
  AggregateResponse response;
  RunTrace trace;
};
StoredResponse response_from_json(const nlohmann::ordered_json& value);
void save_responses(const std::vector<StoredResponse>& responses,
                    const std::string& path);
std::vector<StoredResponse> load_responses(const std::string& path);

nlohmann::ordered_json report_to_json(const MetricReport& report);
nlohmann::ordered_json stats_to_json(const CompositionStats& stats);
nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows);

void write_json_file(const nlohmann::ordered_json& value,
                     const std::string& path);

}  // namespace corg

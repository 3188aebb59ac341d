#include "corg/serialize.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>

namespace corg {

namespace {

using nlohmann::ordered_json;

ordered_json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError("invalid JSON in \"" + path + "\": " + err.what());
  }
}

}  // namespace

nlohmann::ordered_json graph_to_json(const std::string& record_id,
                                     const ContextGraph& graph) {
  ordered_json edges = ordered_json::array();
  for (const auto& [key, relation] : graph.edges()) {
    ordered_json edge;
    edge["a"] = key.first;
    edge["b"] = key.second;
    edge["relation"] = std::string(to_string(relation));
    edges.push_back(std::move(edge));
  }
  ordered_json out;
  out["record_id"] = record_id;
  out["nodes"] = graph.nodes();
  out["edges"] = std::move(edges);
  out["call_count"] = graph.call_count();
  return out;
}

std::string graph_record_id(const nlohmann::ordered_json& value) {
  if (!value.contains("record_id")) {
    return "";
  }
  return value["record_id"].get<std::string>();
}

ContextGraph graph_from_json(const nlohmann::ordered_json& value) {
  ContextGraph graph(value.at("nodes").get<std::vector<std::string>>());
  for (const ordered_json& edge : value.at("edges")) {
    graph.set_edge(edge.at("a").get<std::string>(),
                   edge.at("b").get<std::string>(),
                   relation_from_string(edge.at("relation").get<std::string>()));
  }
  if (value.contains("call_count")) {
    graph.set_call_count(value["call_count"].get<std::size_t>());
  }
  return graph;
}

void save_graphs(const std::vector<std::pair<std::string, ContextGraph>>& graphs,
                 const std::string& path) {
  ordered_json out = ordered_json::array();
  for (const auto& [record_id, graph] : graphs) {
    out.push_back(graph_to_json(record_id, graph));
  }
  write_json_file(out, path);
}

std::vector<std::pair<std::string, ContextGraph>> load_graphs(
    const std::string& path) {
  std::vector<std::string> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.path().extension() == ".json") {
        files.push_back(entry.path().string());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    files.push_back(path);
  }
  std::vector<std::pair<std::string, ContextGraph>> graphs;
  for (const std::string& file : files) {
    const ordered_json value = parse_file(file);
    if (value.is_array()) {
      for (const ordered_json& item : value) {
        graphs.emplace_back(graph_record_id(item), graph_from_json(item));
      }
    } else {
      graphs.emplace_back(graph_record_id(value), graph_from_json(value));
    }
  }
  return graphs;
}

nlohmann::ordered_json plan_to_json(const std::string& record_id,
                                    const GroupPlan& plan) {
  ordered_json removed = ordered_json::array();
  for (const Removal& removal : plan.removed) {
    ordered_json item;
    item["id"] = removal.id;
    item["reason"] = std::string(to_string(removal.reason));
    removed.push_back(std::move(item));
  }
  ordered_json out;
  out["record_id"] = record_id;
  out["groups"] = plan.groups;
  out["group_question"] = plan.group_question;
  out["removed"] = std::move(removed);
  return out;
}

void save_plans(const std::vector<std::pair<std::string, GroupPlan>>& plans,
                const std::string& path) {
  ordered_json out = ordered_json::array();
  for (const auto& [record_id, plan] : plans) {
    out.push_back(plan_to_json(record_id, plan));
  }
  write_json_file(out, path);
}

nlohmann::ordered_json response_to_json(const std::string& record_id,
                                        const AggregateResponse& response,
                                        const RunTrace& trace) {
  ordered_json entries = ordered_json::array();
  for (const ResponseEntry& entry : response.entries) {
    ordered_json item;
    item["answer"] = entry.answer;
    item["descriptor"] =
        entry.descriptor ? ordered_json(*entry.descriptor) : ordered_json(nullptr);
    item["citations"] = entry.citations;
    entries.push_back(std::move(item));
  }
  ordered_json runs = ordered_json::array();
  for (const RunTokens& run : trace.runs) {
    ordered_json item;
    item["input_tokens"] = run.input_tokens;
    item["output_tokens"] = run.output_tokens;
    runs.push_back(std::move(item));
  }
  ordered_json trace_json;
  trace_json["oracle_calls"] = trace.oracle_calls;
  trace_json["groups"] = trace.groups;
  trace_json["runs"] = std::move(runs);

  ordered_json out;
  out["record_id"] = record_id;
  out["entries"] = std::move(entries);
  out["trace"] = std::move(trace_json);
  return out;
}

StoredResponse response_from_json(const nlohmann::ordered_json& value) {
  StoredResponse stored;
  stored.record_id = value.at("record_id").get<std::string>();
  for (const ordered_json& item : value.at("entries")) {
    ResponseEntry entry;
    entry.answer = item.at("answer").get<std::string>();
    if (!item.at("descriptor").is_null()) {
      entry.descriptor = item["descriptor"].get<std::string>();
    }
    entry.citations = item.at("citations").get<std::vector<std::string>>();
    stored.response.entries.push_back(std::move(entry));
  }
  stored.response.rendered = render_entries(stored.response.entries);
  if (value.contains("trace")) {
    const ordered_json& trace = value["trace"];
    stored.trace.oracle_calls = trace.value("oracle_calls", std::size_t{0});
    stored.trace.groups = trace.value("groups", std::size_t{0});
    if (trace.contains("runs")) {
      for (const ordered_json& run : trace["runs"]) {
        stored.trace.runs.push_back({run.value("input_tokens", std::size_t{0}),
                                     run.value("output_tokens", std::size_t{0})});
      }
    }
  }
  return stored;
}

void save_responses(const std::vector<StoredResponse>& responses,
                    const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open \"" + path + "\" for writing");
  }
  for (const StoredResponse& stored : responses) {
    out << response_to_json(stored.record_id, stored.response, stored.trace)
               .dump()
        << '\n';
  }
}

std::vector<StoredResponse> load_responses(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open \"" + path + "\"");
  }
  std::vector<StoredResponse> responses;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) {
      continue;
    }
    try {
      responses.push_back(response_from_json(ordered_json::parse(line)));
    } catch (const nlohmann::json::exception& err) {
      throw ParseError("line " + std::to_string(line_number) +
                       ": invalid response record: " + err.what());
    }
  }
  return responses;
}

nlohmann::ordered_json report_to_json(const MetricReport& report) {
  ordered_json per_record = ordered_json::array();
  for (const auto& [record_id, row] : report.per_record) {
    ordered_json item;
    item["record_id"] = record_id;
    item["ent"] = row.ent;
    item["ans"] = row.ans;
    item["ear"] = row.ear;
    item["d_f1"] = row.d_f1;
    per_record.push_back(std::move(item));
  }
  ordered_json out;
  out["ent"] = report.mean.ent;
  out["ans"] = report.mean.ans;
  out["ear"] = report.mean.ear;
  out["d_f1"] = report.mean.d_f1;
  out["per_record"] = std::move(per_record);
  return out;
}

nlohmann::ordered_json stats_to_json(const CompositionStats& stats) {
  ordered_json composition;
  composition["ambiguous"] = stats.ambiguous;
  composition["distracting"] = stats.distracting;
  composition["counterfactual"] = stats.counterfactual;
  composition["duplicated"] = stats.duplicated;
  ordered_json out;
  out["composition"] = std::move(composition);
  out["coverage"] = stats.coverage;
  out["records_with_pairs"] = stats.records_with_pairs;
  out["records_total"] = stats.records_total;
  return out;
}

nlohmann::ordered_json bench_to_json(const std::vector<BenchRow>& rows) {
  ordered_json out_rows = ordered_json::array();
  for (const BenchRow& row : rows) {
    ordered_json item;
    item["method"] = std::string(to_string(row.method));
    item["ent"] = row.metrics.ent;
    item["ans"] = row.metrics.ans;
    item["ear"] = row.metrics.ear;
    item["d_f1"] = row.metrics.d_f1;
    item["mean_input_tokens"] = row.mean_input_tokens;
    item["mean_output_tokens"] = row.mean_output_tokens;
    item["mean_runs"] = row.mean_runs;
    out_rows.push_back(std::move(item));
  }
  ordered_json out;
  out["rows"] = std::move(out_rows);
  return out;
}

void write_json_file(const nlohmann::ordered_json& value,
                     const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open \"" + path + "\" for writing");
  }
  out << value.dump(2) << '\n';
}

}  // namespace corg

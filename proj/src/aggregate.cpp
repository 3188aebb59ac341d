#include "corg/aggregate.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "corg/oracle.hpp"
#include "corg/text.hpp"

namespace corg {

std::string MockGenerator::generate(const std::string& /*question_form*/,
                                    const std::vector<ParsedContext>& contexts) {
  std::ostringstream oss;
  for (std::size_t k = 0; k < contexts.size(); ++k) {
    const ParsedContext& ctx = contexts[k];
    if (!ctx.answer) {
      continue;
    }
    if (ctx.descriptor) {
      oss << *ctx.descriptor << ": ";
    }
    oss << *ctx.answer << " [" << (k + 1) << "]\n";
  }
  return oss.str();
}

std::string render_prompt(const std::string& question_form,
                          const std::vector<ParsedContext>& contexts) {
  if (question_form.empty()) {
    throw ValidationError("prompt needs a non-empty question");
  }
  if (contexts.empty()) {
    throw ValidationError("prompt needs at least one context");
  }
  std::ostringstream oss;
  for (std::size_t k = 0; k < contexts.size(); ++k) {
    oss << "[" << (k + 1) << "] Title: " << contexts[k].title << "\n"
        << contexts[k].body << "\n\n";
  }
  oss << "Question: " << question_form << "\n"
      << "Answer from the contexts above. Give every distinct answer on its "
         "own line as \"descriptor: answer\", citing the supporting contexts "
         "like [1].";
  return oss.str();
}

namespace {

std::string trim(const std::string& text) {
  std::size_t start = text.find_first_not_of(" \t\r\n");
  if (start == std::string::npos) {
    return "";
  }
  std::size_t end = text.find_last_not_of(" \t\r\n");
  return text.substr(start, end - start + 1);
}

}  // namespace

std::vector<ResponseLine> parse_response_lines(const std::string& text) {
  std::vector<ResponseLine> lines;
  std::istringstream stream(text);
  std::string raw;
  while (std::getline(stream, raw)) {
    std::string body;
    std::vector<std::size_t> citations;
    std::size_t pos = 0;
    while (pos < raw.size()) {
      if (raw[pos] != '[') {
        body.push_back(raw[pos]);
        ++pos;
        continue;
      }
      const std::size_t close = raw.find(']', pos);
      if (close == std::string::npos) {
        body.append(raw.substr(pos));
        break;
      }
      const std::string inner = raw.substr(pos + 1, close - pos - 1);
      const bool numeric =
          !inner.empty() &&
          inner.find_first_not_of("0123456789, ") == std::string::npos &&
          inner.find_first_of("0123456789") != std::string::npos;
      if (numeric) {
        std::istringstream nums(inner);
        std::string piece;
        while (std::getline(nums, piece, ',')) {
          citations.push_back(static_cast<std::size_t>(std::stoul(trim(piece))));
        }
      }
      // Bracket groups never belong to the answer text.
      pos = close + 1;
    }

    ResponseLine line;
    line.citation_indices = std::move(citations);
    const std::string cleaned = trim(body);
    if (cleaned.empty()) {
      continue;
    }
    const std::size_t colon = cleaned.find(": ");
    if (colon != std::string::npos && colon > 0) {
      line.descriptor = trim(cleaned.substr(0, colon));
      line.answer = trim(cleaned.substr(colon + 2));
    } else {
      line.answer = cleaned;
    }
    if (line.answer.empty()) {
      continue;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

namespace {

std::vector<ResponseEntry> entries_from_output(
    const std::string& output, const std::vector<ParsedContext>& group) {
  std::vector<ResponseEntry> entries;
  for (const ResponseLine& line : parse_response_lines(output)) {
    ResponseEntry entry;
    entry.answer = line.answer;
    entry.descriptor = line.descriptor;
    for (std::size_t index : line.citation_indices) {
      if (index == 0 || index > group.size()) {
        std::ostringstream oss;
        oss << "citation index " << index << " out of range for a group of "
            << group.size();
        throw ValidationError(oss.str());
      }
      entry.citations.push_back(group[index - 1].id);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

}  // namespace

std::vector<ResponseEntry> generate_group(
    const std::vector<ParsedContext>& group, const std::string& question_form,
    Generator& generator) {
  if (group.empty()) {
    throw ValidationError("cannot generate over an empty group");
  }
  return entries_from_output(generator.generate(question_form, group), group);
}

namespace {

std::string entry_key(const ResponseEntry& entry) {
  std::string key = normalize_text(entry.answer);
  key.push_back('\x1f');
  if (entry.descriptor) {
    key += normalize_text(*entry.descriptor);
  } else {
    key += "\x1e";
  }
  return key;
}

}  // namespace

AggregateResponse merge_responses(
    const std::vector<std::vector<ResponseEntry>>& per_group) {
  AggregateResponse response;
  std::map<std::string, std::size_t> index_of;
  for (const auto& entries : per_group) {
    for (const ResponseEntry& entry : entries) {
      const std::string key = entry_key(entry);
      auto it = index_of.find(key);
      if (it == index_of.end()) {
        index_of.emplace(key, response.entries.size());
        response.entries.push_back(entry);
        continue;
      }
      ResponseEntry& merged = response.entries[it->second];
      for (const std::string& id : entry.citations) {
        if (std::find(merged.citations.begin(), merged.citations.end(), id) ==
            merged.citations.end()) {
          merged.citations.push_back(id);
        }
      }
    }
  }
  response.rendered = render_entries(response.entries);
  return response;
}

std::string render_entries(const std::vector<ResponseEntry>& entries) {
  std::ostringstream oss;
  bool first = true;
  for (const ResponseEntry& entry : entries) {
    if (!first) {
      oss << "\n";
    }
    first = false;
    if (entry.descriptor) {
      oss << *entry.descriptor << ": ";
    }
    oss << entry.answer;
    if (!entry.citations.empty()) {
      oss << " [";
      for (std::size_t i = 0; i < entry.citations.size(); ++i) {
        if (i > 0) {
          oss << ", ";
        }
        oss << entry.citations[i];
      }
      oss << "]";
    }
  }
  return oss.str();
}

std::vector<ParsedContext> relevant_contexts(const CorpusRecord& record) {
  std::vector<ParsedContext> relevant;
  for (const ParsedContext& ctx : record.contexts) {
    if (ctx.answer && is_relevant(record.question, ctx)) {
      relevant.push_back(ctx);
    }
  }
  return relevant;
}

std::pair<AggregateResponse, RunTrace> execute_plan(
    const GroupPlan& plan, const std::vector<ParsedContext>& contexts,
    Generator& generator) {
  std::map<std::string, const ParsedContext*> by_id;
  for (const ParsedContext& ctx : contexts) {
    by_id.emplace(ctx.id, &ctx);
  }

  RunTrace trace;
  trace.groups = plan.groups.size();
  std::vector<std::vector<ResponseEntry>> per_group;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    std::vector<ParsedContext> group;
    for (const std::string& id : plan.groups[g]) {
      auto it = by_id.find(id);
      if (it == by_id.end()) {
        throw ValidationError("plan references unknown context \"" + id + "\"");
      }
      group.push_back(*it->second);
    }
    const std::string& question_form = plan.group_question[g];
    const std::string prompt = render_prompt(question_form, group);
    const std::string output = generator.generate(question_form, group);
    per_group.push_back(entries_from_output(output, group));
    trace.runs.push_back({token_count(prompt), token_count(output)});
  }
  return {merge_responses(per_group), trace};
}

PipelineResult run_pipeline(const CorpusRecord& record, RelationOracle& oracle,
                            Generator& generator, const PipelineConfig& config) {
  const std::vector<ParsedContext> relevant = relevant_contexts(record);
  if (relevant.empty()) {
    throw ValidationError("record \"" + record.id +
                          "\" has no relevant contexts");
  }
  PipelineResult result;
  result.graph = build_graph_corg(relevant, record.question, oracle, config.mode);
  result.plan = plan_groups(result.graph, relevant, record.question,
                            config.rerank);
  auto [response, trace] = execute_plan(result.plan, relevant, generator);
  result.response = std::move(response);
  result.trace = std::move(trace);
  result.trace.oracle_calls = result.graph.call_count();
  return result;
}

}  // namespace corg

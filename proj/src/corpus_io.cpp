#include "corg/corpus_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "corg/text.hpp"

namespace corg {

namespace {

using nlohmann::ordered_json;

std::string at_line(std::size_t line_number) {
  if (line_number == 0) {
    return "";
  }
  std::ostringstream oss;
  oss << "line " << line_number << ": ";
  return oss.str();
}

const ordered_json& require_field(const ordered_json& obj, const char* field,
                                  std::size_t line_number) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw ParseError(at_line(line_number) + "missing field \"" + field + "\"");
  }
  return *it;
}

std::optional<std::string> optional_string(const ordered_json& obj,
                                           const char* field,
                                           std::size_t line_number) {
  const ordered_json& value = require_field(obj, field, line_number);
  if (value.is_null()) {
    return std::nullopt;
  }
  if (!value.is_string()) {
    throw ParseError(at_line(line_number) + "field \"" + field +
                     "\" must be a string or null");
  }
  return value.get<std::string>();
}

std::string required_string(const ordered_json& obj, const char* field,
                            std::size_t line_number) {
  const ordered_json& value = require_field(obj, field, line_number);
  if (!value.is_string()) {
    throw ParseError(at_line(line_number) + "field \"" + field +
                     "\" must be a string");
  }
  return value.get<std::string>();
}

ordered_json to_json_or_null(const std::optional<std::string>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json record_to_json(const CorpusRecord& record) {
  ordered_json q;
  q["text"] = record.question.text;
  q["entity"] = record.question.entity;
  q["descriptor"] = to_json_or_null(record.question.descriptor);

  ordered_json sub_questions = ordered_json::array();
  for (const SubQuestion& sq : record.question.sub_questions) {
    ordered_json item;
    item["descriptor"] = to_json_or_null(sq.descriptor);
    item["answers"] = sq.answers;
    sub_questions.push_back(std::move(item));
  }

  ordered_json contexts = ordered_json::array();
  for (const ParsedContext& ctx : record.contexts) {
    ordered_json parsed;
    parsed["surface"] = ctx.surface;
    parsed["descriptor"] = to_json_or_null(ctx.descriptor);
    parsed["answer"] = to_json_or_null(ctx.answer);

    ordered_json item;
    item["id"] = ctx.id;
    item["title"] = ctx.title;
    item["body"] = ctx.body;
    item["parsed"] = std::move(parsed);
    item["gold_relation"] = ctx.gold_relation
                                ? ordered_json(std::string(
                                      to_string(*ctx.gold_relation)))
                                : ordered_json(nullptr);
    contexts.push_back(std::move(item));
  }

  ordered_json out;
  out["id"] = record.id;
  out["question"] = std::move(q);
  out["sub_questions"] = std::move(sub_questions);
  out["contexts"] = std::move(contexts);
  return out;
}

CorpusRecord record_from_json(const nlohmann::ordered_json& value,
                              std::size_t line_number) {
  if (!value.is_object()) {
    throw ParseError(at_line(line_number) + "record must be a JSON object");
  }
  CorpusRecord record;
  record.id = required_string(value, "id", line_number);

  const ordered_json& q = require_field(value, "question", line_number);
  record.question.text = required_string(q, "text", line_number);
  record.question.entity = required_string(q, "entity", line_number);
  record.question.descriptor = optional_string(q, "descriptor", line_number);

  const ordered_json& subs = require_field(value, "sub_questions", line_number);
  for (const ordered_json& item : subs) {
    SubQuestion sq;
    sq.descriptor = optional_string(item, "descriptor", line_number);
    const ordered_json& answers = require_field(item, "answers", line_number);
    for (const ordered_json& answer : answers) {
      sq.answers.push_back(answer.get<std::string>());
    }
    record.question.sub_questions.push_back(std::move(sq));
  }

  const ordered_json& contexts = require_field(value, "contexts", line_number);
  for (const ordered_json& item : contexts) {
    ParsedContext ctx;
    ctx.id = required_string(item, "id", line_number);
    ctx.title = required_string(item, "title", line_number);
    ctx.body = required_string(item, "body", line_number);
    const ordered_json& parsed = require_field(item, "parsed", line_number);
    ctx.surface = required_string(parsed, "surface", line_number);
    ctx.descriptor = optional_string(parsed, "descriptor", line_number);
    ctx.answer = optional_string(parsed, "answer", line_number);
    if (auto rel = optional_string(item, "gold_relation", line_number)) {
      ctx.gold_relation = relation_from_string(*rel);
    }
    record.contexts.push_back(std::move(ctx));
  }

  validate_record(record, line_number);
  return record;
}

void validate_record(const CorpusRecord& record, std::size_t line_number) {
  const std::string where = at_line(line_number);
  if (record.id.empty()) {
    throw ValidationError(where + "record id must be non-empty");
  }
  if (record.question.text.empty()) {
    throw ValidationError(where + "question text must be non-empty");
  }
  if (record.question.entity.empty()) {
    throw ValidationError(where + "question entity must be non-empty");
  }
  std::set<std::string> seen_descriptors;
  for (const SubQuestion& sq : record.question.sub_questions) {
    if (sq.descriptor) {
      if (sq.descriptor->empty()) {
        throw ValidationError(where + "sub-question descriptor must be "
                                      "non-empty when present");
      }
      const std::string key = normalize_text(*sq.descriptor);
      if (!seen_descriptors.insert(key).second) {
        throw ValidationError(where + "sub-question descriptors must be "
                                      "pairwise distinct (\"" +
                              *sq.descriptor + "\")");
      }
    }
    for (const std::string& answer : sq.answers) {
      if (answer.empty()) {
        throw ValidationError(where + "gold answers must be non-empty");
      }
    }
  }
  std::set<std::string> seen_ids;
  for (const ParsedContext& ctx : record.contexts) {
    if (!seen_ids.insert(ctx.id).second) {
      throw ValidationError(where + "duplicate context id \"" + ctx.id + "\"");
    }
    if (ctx.surface.empty()) {
      throw ValidationError(where + "context \"" + ctx.id +
                            "\" has an empty surface");
    }
    if (ctx.descriptor && ctx.descriptor->empty()) {
      throw ValidationError(where + "context \"" + ctx.id +
                            "\" has an empty descriptor; use null instead");
    }
  }
}

std::vector<CorpusRecord> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open corpus file \"" + path + "\"");
  }
  std::vector<CorpusRecord> records;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) {
      continue;
    }
    ordered_json value;
    try {
      value = ordered_json::parse(line);
    } catch (const nlohmann::json::parse_error& err) {
      throw ParseError(at_line(line_number) + "invalid JSON: " + err.what());
    }
    records.push_back(record_from_json(value, line_number));
  }
  return records;
}

void save_corpus(const std::vector<CorpusRecord>& records,
                 const std::string& path) {
  std::ofstream out(path);
  if (!out) {
    throw ParseError("cannot open \"" + path + "\" for writing");
  }
  for (const CorpusRecord& record : records) {
    validate_record(record);
    out << record_to_json(record).dump() << '\n';
  }
  if (!out) {
    throw ParseError("failed while writing \"" + path + "\"");
  }
}

}  // namespace corg

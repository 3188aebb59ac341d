#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "corg/types.hpp"

namespace corg {

/// One JSON object per line:
/// {"id", "question": {"text", "entity", "descriptor"},
///  "sub_questions": [{"descriptor", "answers"}],
///  "contexts": [{"id", "title", "body",
///                "parsed": {"surface", "descriptor", "answer"},
///                "gold_relation"}]}
/// Absent descriptors/answers serialize as null.
std::vector<CorpusRecord> load_corpus(const std::string& path);
void save_corpus(const std::vector<CorpusRecord>& records,
                 const std::string& path);

nlohmann::ordered_json record_to_json(const CorpusRecord& record);
CorpusRecord record_from_json(const nlohmann::ordered_json& value,
                              std::size_t line_number = 0);

void validate_record(const CorpusRecord& record, std::size_t line_number = 0);

}  // namespace corg

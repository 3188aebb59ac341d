#include "corg/eval.hpp"

#include <algorithm>

#include "corg/aggregate.hpp"
#include "corg/text.hpp"

namespace corg {

namespace {

std::map<std::string, std::size_t> token_counts(const std::string& text) {
  std::map<std::string, std::size_t> counts;
  for (const std::string& token : normalize_tokens(text)) {
    ++counts[token];
  }
  return counts;
}

double recall_against(const std::map<std::string, std::size_t>& response_counts,
                      const std::string& gold) {
  const std::vector<std::string> gold_tokens = normalize_tokens(gold);
  if (gold_tokens.empty()) {
    return 0.0;
  }
  std::map<std::string, std::size_t> needed;
  for (const std::string& token : gold_tokens) {
    ++needed[token];
  }
  std::size_t hit = 0;
  for (const auto& [token, count] : needed) {
    auto it = response_counts.find(token);
    if (it != response_counts.end()) {
      hit += std::min(count, it->second);
    }
  }
  return static_cast<double>(hit) / static_cast<double>(gold_tokens.size());
}

}  // namespace

double token_recall(const std::string& gold, const std::string& response) {
  return recall_against(token_counts(response), gold);
}

double entity_recall(const std::vector<std::string>& gold_descriptors,
                     const std::string& response) {
  if (gold_descriptors.empty()) {
    throw ValidationError("entity recall needs at least one gold descriptor");
  }
  const auto counts = token_counts(response);
  double total = 0.0;
  for (const std::string& gold : gold_descriptors) {
    total += recall_against(counts, gold);
  }
  return total / static_cast<double>(gold_descriptors.size());
}

double answer_recall(const std::vector<std::string>& gold_answers,
                     const std::string& response) {
  if (gold_answers.empty()) {
    throw ValidationError("answer recall needs at least one gold answer");
  }
  const auto counts = token_counts(response);
  double total = 0.0;
  for (const std::string& gold : gold_answers) {
    total += recall_against(counts, gold);
  }
  return total / static_cast<double>(gold_answers.size());
}

double ear(const std::vector<std::pair<std::string, std::string>>& gold_pairs,
           const std::string& response) {
  if (gold_pairs.empty()) {
    throw ValidationError("entity-answer recall needs at least one pair");
  }
  const auto counts = token_counts(response);
  double total = 0.0;
  for (const auto& [descriptor, answer] : gold_pairs) {
    total += recall_against(counts, descriptor) * recall_against(counts, answer);
  }
  return total / static_cast<double>(gold_pairs.size());
}

double token_f1(const std::string& predicted, const std::string& gold) {
  const std::vector<std::string> pred_tokens = normalize_tokens(predicted);
  const std::vector<std::string> gold_tokens = normalize_tokens(gold);
  if (pred_tokens.empty() || gold_tokens.empty()) {
    return 0.0;
  }
  std::map<std::string, std::size_t> pred_counts;
  for (const std::string& token : pred_tokens) {
    ++pred_counts[token];
  }
  std::map<std::string, std::size_t> gold_counts;
  for (const std::string& token : gold_tokens) {
    ++gold_counts[token];
  }
  std::size_t overlap = 0;
  for (const auto& [token, count] : gold_counts) {
    auto it = pred_counts.find(token);
    if (it != pred_counts.end()) {
      overlap += std::min(count, it->second);
    }
  }
  if (overlap == 0) {
    return 0.0;
  }
  const double precision =
      static_cast<double>(overlap) / static_cast<double>(pred_tokens.size());
  const double recall =
      static_cast<double>(overlap) / static_cast<double>(gold_tokens.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::optional<std::string> StructuredLineExtractor::extract(
    const std::string& sub_question, const std::string& response) {
  const auto question_counts = token_counts(sub_question);
  std::optional<std::string> best;
  std::size_t best_overlap = 0;
  for (const ResponseLine& line : parse_response_lines(response)) {
    if (!line.descriptor) {
      continue;
    }
    std::size_t overlap = 0;
    std::map<std::string, std::size_t> descriptor_counts;
    for (const std::string& token : normalize_tokens(*line.descriptor)) {
      ++descriptor_counts[token];
    }
    for (const auto& [token, count] : descriptor_counts) {
      auto it = question_counts.find(token);
      if (it != question_counts.end()) {
        overlap += std::min(count, it->second);
      }
    }
    if (overlap > best_overlap) {
      best_overlap = overlap;
      best = line.answer;
    }
  }
  return best;
}

std::string sub_question_text(const Question& question, const SubQuestion& sq) {
  if (!sq.descriptor) {
    return question.text;
  }
  return question.text + " (" + *sq.descriptor + ")";
}

double disambig_f1(const Question& question, const std::string& response,
                   QAExtractor& extractor) {
  if (question.sub_questions.empty()) {
    throw ValidationError("disambiguation F1 needs at least one sub-question");
  }
  double total = 0.0;
  for (const SubQuestion& sq : question.sub_questions) {
    const std::optional<std::string> predicted =
        extractor.extract(sub_question_text(question, sq), response);
    double best = 0.0;
    if (predicted) {
      for (const std::string& gold : sq.answers) {
        best = std::max(best, token_f1(*predicted, gold));
      }
    }
    total += best;
  }
  return total / static_cast<double>(question.sub_questions.size());
}

MetricRow evaluate_record(const CorpusRecord& record,
                          const std::string& response, QAExtractor& extractor) {
  MetricRow row;
  const auto descriptors = record.gold_descriptors();
  const auto answers = record.gold_answers();
  const auto pairs = record.gold_pairs();
  row.ent = descriptors.empty() ? 0.0 : entity_recall(descriptors, response);
  row.ans = answers.empty() ? 0.0 : answer_recall(answers, response);
  row.ear = pairs.empty() ? 0.0 : ear(pairs, response);
  row.d_f1 = record.question.sub_questions.empty()
                 ? 0.0
                 : disambig_f1(record.question, response, extractor);
  return row;
}

MetricReport evaluate_responses(
    const std::vector<CorpusRecord>& records,
    const std::map<std::string, std::string>& rendered_by_record,
    QAExtractor& extractor) {
  MetricReport report;
  for (const CorpusRecord& record : records) {
    auto it = rendered_by_record.find(record.id);
    if (it == rendered_by_record.end()) {
      throw ValidationError("no response for record \"" + record.id + "\"");
    }
    report.per_record.emplace_back(record.id,
                                   evaluate_record(record, it->second, extractor));
  }
  if (!report.per_record.empty()) {
    for (const auto& [id, row] : report.per_record) {
      report.mean.ent += row.ent;
      report.mean.ans += row.ans;
      report.mean.ear += row.ear;
      report.mean.d_f1 += row.d_f1;
    }
    const double count = static_cast<double>(report.per_record.size());
    report.mean.ent /= count;
    report.mean.ans /= count;
    report.mean.ear /= count;
    report.mean.d_f1 /= count;
  }
  return report;
}

CompositionStats corpus_stats(const std::vector<CorpusRecord>& records,
                              const std::vector<ContextGraph>& graphs) {
  if (records.size() != graphs.size()) {
    throw ValidationError("corpus_stats needs one graph per record");
  }
  CompositionStats stats;
  stats.records_total = records.size();
  double coverage_total = 0.0;
  for (std::size_t r = 0; r < records.size(); ++r) {
    const ContextGraph& graph = graphs[r];
    const std::size_t pairs = graph.edges().size();
    if (pairs > 0) {
      std::size_t ambiguous = 0;
      std::size_t distracting = 0;
      std::size_t counterfactual = 0;
      std::size_t duplicated = 0;
      for (const auto& [key, relation] : graph.edges()) {
        switch (taxonomy_of(relation)) {
          case TaxonomyLabel::Ambiguous:
            ++ambiguous;
            break;
          case TaxonomyLabel::Distracting:
            ++distracting;
            break;
          case TaxonomyLabel::Counterfactual:
            ++counterfactual;
            break;
          case TaxonomyLabel::Duplicated:
            ++duplicated;
            break;
        }
      }
      const double total = static_cast<double>(pairs);
      stats.ambiguous += static_cast<double>(ambiguous) / total;
      stats.distracting += static_cast<double>(distracting) / total;
      stats.counterfactual += static_cast<double>(counterfactual) / total;
      stats.duplicated += static_cast<double>(duplicated) / total;
      ++stats.records_with_pairs;
    }

    const auto golds = records[r].gold_answers();
    if (!golds.empty()) {
      std::size_t covered = 0;
      for (const std::string& gold : golds) {
        for (const ParsedContext& ctx : records[r].contexts) {
          if (contains_token_subsequence(ctx.body, gold)) {
            ++covered;
            break;
          }
        }
      }
      coverage_total +=
          static_cast<double>(covered) / static_cast<double>(golds.size());
    }
  }
  if (stats.records_with_pairs > 0) {
    const double count = static_cast<double>(stats.records_with_pairs);
    stats.ambiguous /= count;
    stats.distracting /= count;
    stats.counterfactual /= count;
    stats.duplicated /= count;
  }
  if (!records.empty()) {
    stats.coverage = coverage_total / static_cast<double>(records.size());
  }
  return stats;
}

std::map<std::string, MethodTokenStats> token_account(
    const std::vector<TraceSample>& samples) {
  struct Accumulator {
    std::size_t input = 0;
    std::size_t output = 0;
    std::size_t runs = 0;
    std::size_t records = 0;
  };
  std::map<std::string, Accumulator> acc;
  for (const TraceSample& sample : samples) {
    Accumulator& a = acc[sample.method];
    ++a.records;
    a.runs += sample.runs.size();
    for (const RunTokens& run : sample.runs) {
      a.input += run.input_tokens;
      a.output += run.output_tokens;
    }
  }
  std::map<std::string, MethodTokenStats> out;
  for (const auto& [method, a] : acc) {
    MethodTokenStats stats;
    stats.records = a.records;
    const double records = static_cast<double>(a.records);
    stats.mean_input_tokens = static_cast<double>(a.input) / records;
    stats.mean_output_tokens = static_cast<double>(a.output) / records;
    stats.mean_runs = static_cast<double>(a.runs) / records;
    out.emplace(method, stats);
  }
  return out;
}

double flops_proxy(const std::vector<TraceSample>& samples,
                   double parameter_count) {
  if (parameter_count <= 0.0) {
    throw ValidationError("parameter count must be positive");
  }
  double tokens = 0.0;
  for (const TraceSample& sample : samples) {
    for (const RunTokens& run : sample.runs) {
      tokens += static_cast<double>(run.input_tokens + run.output_tokens);
    }
  }
  return 2.0 * parameter_count * tokens;
}

}  // namespace corg

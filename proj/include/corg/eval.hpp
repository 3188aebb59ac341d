#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corg/types.hpp"

namespace corg {

/// Pulls the answer for one sub-question out of a rendered response.
class QAExtractor {
 public:
  virtual ~QAExtractor() = default;
  virtual std::optional<std::string> extract(const std::string& sub_question,
                                             const std::string& response) = 0;
};

/// Default extractor over "descriptor: answer [ids]" lines: picks the line
/// whose descriptor tokens overlap the sub-question most (ties -> first
/// line) and returns its answer; absent when no line overlaps at all.
class StructuredLineExtractor final : public QAExtractor {
 public:
  std::optional<std::string> extract(const std::string& sub_question,
                                     const std::string& response) override;
};

/// Token-level recall of `gold` inside `response`: the fraction of gold
/// tokens found, with response token counts capping multiplicity.
double token_recall(const std::string& gold, const std::string& response);

/// Mean token recall over the gold strings. Errors on an empty gold list.
double entity_recall(const std::vector<std::string>& gold_descriptors,
                     const std::string& response);
double answer_recall(const std::vector<std::string>& gold_answers,
                     const std::string& response);

/// Mean over (descriptor, answer) pairs of recall(descriptor) *
/// recall(answer).
double ear(const std::vector<std::pair<std::string, std::string>>& gold_pairs,
           const std::string& response);

/// Standard token-level F1 between two strings (0 when either is empty or
/// they share no token).
double token_f1(const std::string& predicted, const std::string& gold);

/// The question text used to probe one sub-question: the record question
/// with the sub-question descriptor appended when present.
std::string sub_question_text(const Question& question, const SubQuestion& sq);

/// Mean over sub-questions of the best token F1 between the extracted
/// answer and any gold; 0 for a sub-question when extraction comes back
/// empty.
double disambig_f1(const Question& question, const std::string& response,
                   QAExtractor& extractor);

struct MetricRow {
  double ent = 0.0;
  double ans = 0.0;
  double ear = 0.0;
  double d_f1 = 0.0;
};

struct MetricReport {
  MetricRow mean;
  std::vector<std::pair<std::string, MetricRow>> per_record;
};

MetricRow evaluate_record(const CorpusRecord& record,
                          const std::string& response, QAExtractor& extractor);

MetricReport evaluate_responses(
    const std::vector<CorpusRecord>& records,
    const std::map<std::string, std::string>& rendered_by_record,
    QAExtractor& extractor);

struct CompositionStats {
  double ambiguous = 0.0;
  double distracting = 0.0;
  double counterfactual = 0.0;
  double duplicated = 0.0;
  double coverage = 0.0;
  std::size_t records_with_pairs = 0;
  std::size_t records_total = 0;
};

/// Per-record relation composition (four-way; Ambiguous and None report as
/// ambiguous) averaged over records with at least one pair, plus the
/// fraction of gold answers appearing verbatim in some context body.
CompositionStats corpus_stats(const std::vector<CorpusRecord>& records,
                              const std::vector<ContextGraph>& graphs);

struct TraceSample {
  std::string method;
  std::string record_id;
  std::vector<RunTokens> runs;
};

struct MethodTokenStats {
  double mean_input_tokens = 0.0;
  double mean_output_tokens = 0.0;
  double mean_runs = 0.0;
  std::size_t records = 0;
};

/// Per-method mean input/output tokens and runs per record.
std::map<std::string, MethodTokenStats> token_account(
    const std::vector<TraceSample>& samples);

/// 2 * P * (input + output tokens) summed over every run. P must be > 0.
double flops_proxy(const std::vector<TraceSample>& samples,
                   double parameter_count);

}  // namespace corg

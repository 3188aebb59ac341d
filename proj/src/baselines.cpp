#include "corg/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "corg/text.hpp"

namespace corg {

std::string_view to_string(MethodId method) {
  switch (method) {
    case MethodId::Base:
      return "base";
    case MethodId::Retrieve:
      return "retrieve";
    case MethodId::Summarize:
      return "summarize";
    case MethodId::Random:
      return "random";
    case MethodId::KMeans:
      return "kmeans";
    case MethodId::COrg:
      return "corg";
    case MethodId::Separate:
      return "separate";
  }
  return "unknown";
}

MethodId method_from_string(std::string_view name) {
  if (name == "base") return MethodId::Base;
  if (name == "retrieve") return MethodId::Retrieve;
  if (name == "summarize") return MethodId::Summarize;
  if (name == "random") return MethodId::Random;
  if (name == "kmeans") return MethodId::KMeans;
  if (name == "corg") return MethodId::COrg;
  if (name == "separate") return MethodId::Separate;
  throw ConfigError("unknown method \"" + std::string(name) + "\"");
}

HashedNgramEmbedder::HashedNgramEmbedder(std::size_t dimensions)
    : dimensions_(dimensions) {
  if (dimensions_ == 0) {
    throw ConfigError("embedder dimension must be positive");
  }
}

std::vector<double> HashedNgramEmbedder::embed(const std::string& text) {
  std::vector<double> vec(dimensions_, 0.0);
  const std::string normalized = normalize_text(text);
  if (normalized.size() >= 3) {
    std::hash<std::string_view> hasher;
    for (std::size_t i = 0; i + 3 <= normalized.size(); ++i) {
      const std::string_view gram(normalized.data() + i, 3);
      vec[hasher(gram) % dimensions_] += 1.0;
    }
  }
  double norm = 0.0;
  for (double v : vec) {
    norm += v * v;
  }
  if (norm > 0.0) {
    norm = std::sqrt(norm);
    for (double& v : vec) {
      v /= norm;
    }
  }
  return vec;
}

std::vector<std::string> IdOrderRanker::rank(
    const Question& /*question*/, const std::vector<ParsedContext>& contexts) {
  std::vector<std::string> ids;
  ids.reserve(contexts.size());
  for (const ParsedContext& ctx : contexts) {
    ids.push_back(ctx.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string LeadingSentenceSummarizer::summarize(
    const std::vector<ParsedContext>& contexts) {
  std::string summary;
  for (const ParsedContext& ctx : contexts) {
    const std::size_t stop = ctx.body.find('.');
    const std::string sentence =
        stop == std::string::npos ? ctx.body : ctx.body.substr(0, stop + 1);
    if (!summary.empty()) {
      summary += " ";
    }
    summary += sentence;
  }
  return summary;
}

namespace {

double cosine_distance(const std::vector<double>& a,
                       const std::vector<double>& b) {
  double dot = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
  }
  return 1.0 - dot;
}

}  // namespace

std::vector<std::size_t> kmeans_assign(
    const std::vector<std::vector<double>>& points, std::size_t clusters,
    std::uint64_t seed, std::size_t max_iterations) {
  const std::size_t n = points.size();
  if (clusters == 0 || clusters > n) {
    throw ValidationError("cluster count must lie in [1, point count]");
  }
  std::mt19937_64 rng(seed);

  // Farthest-first seeding.
  std::vector<std::vector<double>> centroids;
  centroids.push_back(points[rng() % n]);
  while (centroids.size() < clusters) {
    std::size_t best = 0;
    double best_distance = -1.0;
    for (std::size_t i = 0; i < n; ++i) {
      double nearest = std::numeric_limits<double>::max();
      for (const auto& centroid : centroids) {
        nearest = std::min(nearest, cosine_distance(points[i], centroid));
      }
      if (nearest > best_distance) {
        best_distance = nearest;
        best = i;
      }
    }
    centroids.push_back(points[best]);
  }

  std::vector<std::size_t> assignment(n, 0);
  for (std::size_t iteration = 0; iteration < max_iterations; ++iteration) {
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t best = 0;
      double best_distance = std::numeric_limits<double>::max();
      for (std::size_t c = 0; c < clusters; ++c) {
        const double d = cosine_distance(points[i], centroids[c]);
        if (d < best_distance) {
          best_distance = d;
          best = c;
        }
      }
      if (assignment[i] != best) {
        assignment[i] = best;
        changed = true;
      }
    }

    // Refill empty clusters with the point farthest from its centroid.
    for (std::size_t c = 0; c < clusters; ++c) {
      if (std::count(assignment.begin(), assignment.end(), c) > 0) {
        continue;
      }
      std::size_t farthest = 0;
      double farthest_distance = -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        if (std::count(assignment.begin(), assignment.end(), assignment[i]) <=
            1) {
          continue;
        }
        const double d = cosine_distance(points[i], centroids[assignment[i]]);
        if (d > farthest_distance) {
          farthest_distance = d;
          farthest = i;
        }
      }
      assignment[farthest] = c;
      changed = true;
    }

    for (std::size_t c = 0; c < clusters; ++c) {
      std::vector<double> mean(points[0].size(), 0.0);
      std::size_t count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (assignment[i] == c) {
          for (std::size_t d = 0; d < mean.size(); ++d) {
            mean[d] += points[i][d];
          }
          ++count;
        }
      }
      if (count > 0) {
        double norm = 0.0;
        for (double& v : mean) {
          v /= static_cast<double>(count);
          norm += v * v;
        }
        if (norm > 0.0) {
          norm = std::sqrt(norm);
          for (double& v : mean) {
            v /= norm;
          }
        }
        centroids[c] = std::move(mean);
      }
    }
    if (!changed) {
      break;
    }
  }
  return assignment;
}

namespace {

GroupPlan plan_of_groups(std::vector<std::vector<std::string>> groups,
                         const Question& question,
                         const RerankConfig& rerank) {
  GroupPlan plan;
  plan.groups = std::move(groups);
  for (const auto& group : plan.groups) {
    plan.group_question.push_back(
        group.size() >= 2
            ? pluralize_question(question.text, rerank.plural_overrides)
            : question.text);
  }
  return plan;
}

PipelineResult finish(const GroupPlan& plan,
                      const std::vector<ParsedContext>& contexts,
                      Generator& generator, std::size_t oracle_calls) {
  PipelineResult result;
  result.plan = plan;
  auto [response, trace] = execute_plan(plan, contexts, generator);
  result.response = std::move(response);
  result.trace = std::move(trace);
  result.trace.oracle_calls = oracle_calls;
  return result;
}

}  // namespace

PipelineResult run_baseline(MethodId method, const CorpusRecord& record,
                            RelationOracle& oracle, Generator& generator,
                            const Providers& providers,
                            const BaselineConfig& config) {
  if (method == MethodId::COrg) {
    PipelineConfig pipeline_config;
    pipeline_config.mode = config.mode;
    pipeline_config.rerank = config.rerank;
    return run_pipeline(record, oracle, generator, pipeline_config);
  }

  const std::vector<ParsedContext> relevant = relevant_contexts(record);
  if (relevant.empty()) {
    throw ValidationError("record \"" + record.id +
                          "\" has no relevant contexts");
  }

  auto all_ids = [&]() {
    std::vector<std::string> ids;
    for (const ParsedContext& ctx : relevant) {
      ids.push_back(ctx.id);
    }
    return ids;
  };

  switch (method) {
    case MethodId::Base: {
      GroupPlan plan;
      plan.groups = {all_ids()};
      plan.group_question = {record.question.text};
      return finish(plan, relevant, generator, 0);
    }
    case MethodId::Separate: {
      GroupPlan plan;
      for (const ParsedContext& ctx : relevant) {
        plan.groups.push_back({ctx.id});
        plan.group_question.push_back(record.question.text);
      }
      return finish(plan, relevant, generator, 0);
    }
    case MethodId::Retrieve: {
      if (!providers.ranker) {
        throw ConfigError("retrieve needs a ranker provider");
      }
      std::vector<std::string> ranked =
          providers.ranker->rank(record.question, relevant);
      if (ranked.size() > config.retrieve_top_k) {
        ranked.resize(config.retrieve_top_k);
      }
      GroupPlan plan;
      plan.groups = {ranked};
      plan.group_question = {record.question.text};
      return finish(plan, relevant, generator, 0);
    }
    case MethodId::Summarize: {
      if (!providers.summarizer) {
        throw ConfigError("summarize needs a summarizer provider");
      }
      ParsedContext summary;
      summary.id = "summary";
      summary.title = "Summary";
      summary.body = providers.summarizer->summarize(relevant);
      summary.surface = record.question.entity;
      GroupPlan plan;
      plan.groups = {{summary.id}};
      plan.group_question = {record.question.text};
      return finish(plan, {summary}, generator, 0);
    }
    case MethodId::Random:
    case MethodId::KMeans: {
      // Group count matches the planner's for the same record and seed.
      const ContextGraph graph =
          build_graph_corg(relevant, record.question, oracle, config.mode);
      const GroupPlan reference =
          plan_groups(graph, relevant, record.question, config.rerank);
      const std::size_t group_count = reference.groups.size();

      std::vector<std::vector<std::string>> groups(group_count);
      if (method == MethodId::Random) {
        std::mt19937_64 rng(config.rerank.seed);
        std::vector<std::size_t> order(relevant.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
          order[i] = i;
        }
        std::shuffle(order.begin(), order.end(), rng);
        // The first `group_count` contexts keep every group non-empty.
        for (std::size_t i = 0; i < order.size(); ++i) {
          const std::size_t g =
              i < group_count
                  ? i
                  : std::uniform_int_distribution<std::size_t>(
                        0, group_count - 1)(rng);
          groups[g].push_back(relevant[order[i]].id);
        }
      } else {
        if (!providers.embedder) {
          throw ConfigError("kmeans needs an embedder provider");
        }
        std::vector<std::vector<double>> points;
        points.reserve(relevant.size());
        for (const ParsedContext& ctx : relevant) {
          points.push_back(providers.embedder->embed(ctx.title + " " + ctx.body));
        }
        const std::vector<std::size_t> assignment =
            kmeans_assign(points, group_count, config.rerank.seed);
        for (std::size_t i = 0; i < relevant.size(); ++i) {
          groups[assignment[i]].push_back(relevant[i].id);
        }
      }
      return finish(plan_of_groups(std::move(groups), record.question,
                                   config.rerank),
                    relevant, generator, graph.call_count());
    }
    default:
      throw ConfigError("unhandled method");
  }
}

std::vector<BenchRow> compare_methods(const std::vector<CorpusRecord>& records,
                                      const std::vector<MethodId>& methods,
                                      RelationOracle& oracle,
                                      Generator& generator,
                                      const Providers& providers,
                                      const BaselineConfig& config,
                                      QAExtractor& extractor) {
  std::vector<BenchRow> rows;
  for (MethodId method : methods) {
    BenchRow row;
    row.method = method;
    std::vector<TraceSample> samples;
    double ent = 0.0;
    double ans = 0.0;
    double ear_sum = 0.0;
    double d_f1 = 0.0;
    for (const CorpusRecord& record : records) {
      const PipelineResult result =
          run_baseline(method, record, oracle, generator, providers, config);
      const MetricRow metrics =
          evaluate_record(record, result.response.rendered, extractor);
      ent += metrics.ent;
      ans += metrics.ans;
      ear_sum += metrics.ear;
      d_f1 += metrics.d_f1;
      samples.push_back(
          {std::string(to_string(method)), record.id, result.trace.runs});
    }
    const double count = records.empty() ? 1.0 : static_cast<double>(records.size());
    row.metrics.ent = ent / count;
    row.metrics.ans = ans / count;
    row.metrics.ear = ear_sum / count;
    row.metrics.d_f1 = d_f1 / count;
    const auto accounted = token_account(samples);
    if (auto it = accounted.find(std::string(to_string(method)));
        it != accounted.end()) {
      row.mean_input_tokens = it->second.mean_input_tokens;
      row.mean_output_tokens = it->second.mean_output_tokens;
      row.mean_runs = it->second.mean_runs;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace corg

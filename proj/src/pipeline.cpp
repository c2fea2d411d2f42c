#include "clst/pipeline.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "clst/spec_tree.hpp"

namespace clst {

namespace {

std::string method_name(Method m) {
  switch (m) {
    case Method::clst05:
      return "clst05";
    case Method::clst06:
      return "clst06";
    case Method::baseline:
      return "baseline";
  }
  return "unknown";
}

}  // namespace

std::string RunConfig::effective_tag() const {
  if (!run_tag.empty()) return run_tag;
  std::string tag = method_name(method);
  if (method != Method::baseline) {
    if (!retag) tag += "-noretag";
    if (boost) tag += "-boost";
  }
  return tag;
}

QuerySpec extract_query(const ClaimDocument& doc, const ParseSet& parses,
                        const RunConfig& config, const CollectionStats* stats,
                        ExtractDiagnostics* diag) {
  if (doc.language != "en") {
    if (diag) ++diag->skipped_non_english_docs;
    return {};
  }
  if (config.method == Method::baseline) {
    if (!stats)
      throw std::invalid_argument("baseline extraction needs collection stats");
    std::size_t k = config.top_n > 0 ? static_cast<std::size_t>(config.top_n) : 70;
    return tfidf_keywords(doc, *stats, k);
  }

  std::vector<RefDiagnostic>* refs = diag ? &diag->ref_diagnostics : nullptr;
  ClaimGraph graph = build_claim_graph(doc, refs);
  std::map<int, int> depth = claim_depth(graph);

  std::vector<SpecializationTree> trees;
  trees.reserve(doc.claims.size());
  for (const Claim& claim : doc.claims) {
    const ParseTree* parse = parses.find(doc.doc_id, claim.num);
    if (!parse) {
      if (diag) ++diag->missing_parses;
      continue;
    }
    if (config.retag) {
      trees.push_back(build_spec_tree(retag(*parse), depth.at(claim.num)));
    } else {
      trees.push_back(build_spec_tree(*parse, depth.at(claim.num)));
    }
  }

  PositionIndex index = word_positions(trees);
  ScoringParams params{config.alpha, config.beta, config.method,
                       config.top_n};
  std::vector<ScoredStem> scored =
      score_stems(aggregate_stems(index), params);
  std::vector<ScoredStem> top =
      select_top_n(std::move(scored), static_cast<std::size_t>(config.top_n));
  return build_query(top, config.boost);
}

void write_query_dump_line(std::ostream& out, const std::string& doc_id,
                           const std::string& method, const QuerySpec& query) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const QueryTerm& t : query.terms)
    terms.push_back({{"w", t.word}, {"boost", t.boost}});
  nlohmann::ordered_json rec{
      {"doc_id", doc_id}, {"method", method}, {"terms", std::move(terms)}};
  out << rec.dump() << "\n";
}

RunOutput run_experiment(const Corpus& corpus, const ParseSet& parses,
                         const std::vector<TopicCase>& topics,
                         const RunConfig& config) {
  InvertedIndex index = build_index(corpus);
  CollectionStats stats;
  if (config.method == Method::baseline) stats = collection_stats(corpus);

  // Topics in ascending id order: reruns are byte-identical regardless
  // of qrels line order.
  std::vector<const TopicCase*> ordered;
  ordered.reserve(topics.size());
  for (const TopicCase& t : topics) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const TopicCase* a, const TopicCase* b) {
              return a->topic_doc_id < b->topic_doc_id;
            });

  RunOutput out;
  std::ostringstream run;
  std::string tag = config.effective_tag();
  double recall_sum = 0.0, pres_sum = 0.0;

  for (const TopicCase* topic : ordered) {
    TopicMetrics tm;
    tm.topic_doc_id = topic->topic_doc_id;
    tm.n = static_cast<int>(topic->relevant_family_ids.size());

    const ClaimDocument* doc = corpus.find(topic->topic_doc_id);
    std::vector<SearchResult> results;
    if (!doc) {
      tm.missing_topic_doc = true;
    } else {
      QuerySpec query = extract_query(*doc, parses, config,
                                      config.method == Method::baseline
                                          ? &stats
                                          : nullptr);
      tm.empty_query = query.terms.empty();
      if (!tm.empty_query) {
        results = search(index, query, static_cast<std::size_t>(config.n_max),
                         &doc->family_id);
      }
    }
    write_run_lines(run, topic->topic_doc_id, results, tag);

    TopicOutcome outcome;
    outcome.topic_doc_id = topic->topic_doc_id;
    outcome.n = tm.n;
    outcome.n_max = config.n_max;
    for (const SearchResult& r : results) {
      if (topic->relevant_family_ids.count(r.family_id))
        outcome.ranks_of_relevant.push_back(r.rank);
    }
    tm.retrieved = static_cast<int>(outcome.ranks_of_relevant.size());
    tm.recall = recall_at(outcome);
    tm.pres = pres_at(outcome);
    recall_sum += tm.recall;
    pres_sum += tm.pres;
    out.report.topics.push_back(std::move(tm));
  }

  if (!out.report.topics.empty()) {
    out.report.mean_recall = recall_sum / out.report.topics.size();
    out.report.mean_pres = pres_sum / out.report.topics.size();
  }
  out.run_file = run.str();
  return out;
}

std::string report_to_json(const MetricReport& report,
                           const RunConfig& config) {
  nlohmann::ordered_json topics = nlohmann::ordered_json::array();
  for (const TopicMetrics& t : report.topics) {
    topics.push_back({{"topic", t.topic_doc_id},
                      {"n_relevant", t.n},
                      {"retrieved_relevant", t.retrieved},
                      {"recall", t.recall},
                      {"pres", t.pres},
                      {"empty_query", t.empty_query},
                      {"missing_topic_doc", t.missing_topic_doc}});
  }
  nlohmann::ordered_json j{
      {"run_tag", config.effective_tag()},
      {"method", method_name(config.method)},
      {"boost", config.boost},
      {"retag", config.retag},
      {"top_n", config.top_n},
      {"alpha", config.alpha},
      {"beta", config.beta},
      {"n_max", config.n_max},
      {"seed", config.seed},
      {"num_topics", report.topics.size()},
      {"mean_recall", report.mean_recall},
      {"mean_pres", report.mean_pres},
      {"topics", std::move(topics)}};
  return j.dump(2) + "\n";
}

GridResult grid_search_experiment(const Corpus& corpus, const ParseSet& parses,
                                  const std::vector<TopicCase>& topics,
                                  const RunConfig& base_config,
                                  std::span<const double> alpha_grid,
                                  std::span<const double> beta_grid) {
  return grid_search(alpha_grid, beta_grid, [&](double alpha, double beta) {
    RunConfig config = base_config;
    config.alpha = alpha;
    config.beta = beta;
    return run_experiment(corpus, parses, topics, config).report.mean_pres;
  });
}

MetricReport evaluate_run_file(std::istream& run,
                               const std::vector<TopicCase>& topics,
                               int n_max) {
  std::map<std::string, std::vector<std::pair<int, std::string>>> by_topic;
  std::string line;
  while (std::getline(run, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::string topic, q0, family, score, tag;
    int rank = 0;
    if (!(fields >> topic >> q0 >> family >> rank >> score >> tag))
      throw std::runtime_error("bad run-file line: " + line);
    by_topic[topic].emplace_back(rank, family);
  }

  MetricReport report;
  double recall_sum = 0.0, pres_sum = 0.0;
  std::vector<const TopicCase*> ordered;
  for (const TopicCase& t : topics) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](const TopicCase* a, const TopicCase* b) {
              return a->topic_doc_id < b->topic_doc_id;
            });
  for (const TopicCase* topic : ordered) {
    TopicMetrics tm;
    tm.topic_doc_id = topic->topic_doc_id;
    tm.n = static_cast<int>(topic->relevant_family_ids.size());
    TopicOutcome outcome;
    outcome.topic_doc_id = topic->topic_doc_id;
    outcome.n = tm.n;
    outcome.n_max = n_max;
    auto it = by_topic.find(topic->topic_doc_id);
    if (it != by_topic.end()) {
      std::sort(it->second.begin(), it->second.end());
      for (const auto& [rank, family] : it->second) {
        if (rank <= n_max && topic->relevant_family_ids.count(family))
          outcome.ranks_of_relevant.push_back(rank);
      }
    }
    tm.retrieved = static_cast<int>(outcome.ranks_of_relevant.size());
    tm.recall = recall_at(outcome);
    tm.pres = pres_at(outcome);
    recall_sum += tm.recall;
    pres_sum += tm.pres;
    report.topics.push_back(std::move(tm));
  }
  if (!report.topics.empty()) {
    report.mean_recall = recall_sum / report.topics.size();
    report.mean_pres = pres_sum / report.topics.size();
  }
  return report;
}

}  // namespace clst

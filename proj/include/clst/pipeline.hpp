// End-to-end experiment orchestration: keyword extraction per topic
// document, retrieval over the corpus index, metric computation and the
// serialized artifacts (run file, query dump, metric report). Everything
// here is deterministic for a fixed configuration and seed.

#ifndef CLST_PIPELINE_HPP
#define CLST_PIPELINE_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "clst/baseline.hpp"
#include "clst/claim_graph.hpp"
#include "clst/corpus.hpp"
#include "clst/eval.hpp"
#include "clst/parse_tree.hpp"
#include "clst/scoring.hpp"
#include "clst/search.hpp"

namespace clst {

struct RunConfig {
  Method method = Method::clst05;
  bool boost = false;
  bool retag = true;
  int top_n = 100;  // keyword count; the baseline default is 70
  double alpha = 1.0;
  double beta = 0.5;
  int n_max = 100;
  std::uint64_t seed = 42;
  std::string run_tag;  // derived from method and variants when empty

  std::string effective_tag() const;
};

struct ExtractDiagnostics {
  std::size_t missing_parses = 0;
  std::size_t skipped_non_english_docs = 0;
  std::vector<RefDiagnostic> ref_diagnostics;
};

// Claim graph -> parse (optional retag) -> specialization trees ->
// stem scoring -> query; or the tf-idf baseline when method == baseline
// (stats required then).
QuerySpec extract_query(const ClaimDocument& doc, const ParseSet& parses,
                        const RunConfig& config,
                        const CollectionStats* stats = nullptr,
                        ExtractDiagnostics* diag = nullptr);

void write_query_dump_line(std::ostream& out, const std::string& doc_id,
                           const std::string& method, const QuerySpec& query);

struct TopicMetrics {
  std::string topic_doc_id;
  int n = 0;          // relevant families
  int retrieved = 0;  // relevant retrieved within the cutoff
  double recall = 0.0;
  double pres = 0.0;
  bool empty_query = false;
  bool missing_topic_doc = false;
};

struct MetricReport {
  std::vector<TopicMetrics> topics;
  double mean_recall = 0.0;
  double mean_pres = 0.0;
};

struct RunOutput {
  std::string run_file;  // full text, one line per result
  MetricReport report;
};

RunOutput run_experiment(const Corpus& corpus, const ParseSet& parses,
                         const std::vector<TopicCase>& topics,
                         const RunConfig& config);

std::string report_to_json(const MetricReport& report, const RunConfig& config);

// Mean PRES@N_max over the grid; base_config supplies everything except
// alpha/beta.
GridResult grid_search_experiment(const Corpus& corpus, const ParseSet& parses,
                                  const std::vector<TopicCase>& topics,
                                  const RunConfig& base_config,
                                  std::span<const double> alpha_grid,
                                  std::span<const double> beta_grid);

// Scores an existing run file against qrels (used by the report command).
MetricReport evaluate_run_file(std::istream& run,
                               const std::vector<TopicCase>& topics,
                               int n_max);

}  // namespace clst

#endif

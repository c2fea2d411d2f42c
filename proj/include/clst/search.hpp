// Inverted-index retrieval over corpus claims with the classic
// tf-idf/vector-space similarity:
//
//   score(q,d) = coord(q,d) * queryNorm(q)
//              * sum over t in q of tf(t in d) * idf(t)^2 * boost(t) * norm(t,d)
//
//   tf = sqrt(freq), idf = 1 + ln(num_docs / (doc_freq + 1)),
//   coord = matching terms / query terms,
//   queryNorm = 1 / sqrt(sum (idf * boost)^2), norm = 1 / sqrt(doc length).
//
// Results are deduplicated by patent family, keeping the best-scoring
// member. Every factor is exposed for audit through ScoreBreakdown.

#ifndef CLST_SEARCH_HPP
#define CLST_SEARCH_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "clst/corpus.hpp"
#include "clst/scoring.hpp"

namespace clst {

class InvertedIndex {
 public:
  struct Posting {
    std::size_t doc = 0;  // index into doc_ids()
    int freq = 0;
  };

  static InvertedIndex build(const Corpus& corpus);

  std::size_t num_docs() const { return doc_ids_.size(); }
  std::size_t doc_freq(const std::string& term) const;
  const std::vector<Posting>* postings(const std::string& term) const;
  const std::map<std::string, std::vector<Posting>>& all_postings() const {
    return postings_;
  }
  std::size_t field_length(std::size_t doc) const { return lengths_[doc]; }

  const std::vector<std::string>& doc_ids() const { return doc_ids_; }
  const std::string& family_of(std::size_t doc) const { return families_[doc]; }
  // Throws std::out_of_range for unknown ids.
  std::size_t doc_index(const std::string& doc_id) const;

  std::size_t skipped_non_english() const { return skipped_non_english_; }

 private:
  std::map<std::string, std::vector<Posting>> postings_;
  std::vector<std::string> doc_ids_;   // sorted; posting doc order follows
  std::vector<std::string> families_;
  std::vector<std::size_t> lengths_;
  std::map<std::string, std::size_t> by_id_;
  std::size_t skipped_non_english_ = 0;
};

inline InvertedIndex build_index(const Corpus& corpus) {
  return InvertedIndex::build(corpus);
}

struct TermFactors {
  std::string term;
  double tf = 0.0;
  double idf = 0.0;
  double boost = 1.0;
  double norm = 0.0;
  bool present = false;
};

struct ScoreBreakdown {
  double coord = 0.0;
  double query_norm = 0.0;
  double total = 0.0;
  std::vector<TermFactors> terms;
};

ScoreBreakdown score_doc_breakdown(const InvertedIndex& index,
                                   const QuerySpec& query,
                                   const std::string& doc_id);
double score_doc(const InvertedIndex& index, const QuerySpec& query,
                 const std::string& doc_id);

struct SearchResult {
  std::string family_id;
  std::string best_doc_id;
  double score = 0.0;
  int rank = 0;  // 1-based
};

// Scores the union of postings of the query terms, deduplicates by
// family (best member kept) and returns the top k, descending score,
// ties by family_id. exclude_family drops one family (the topic's own).
std::vector<SearchResult> search(const InvertedIndex& index,
                                 const QuerySpec& query, std::size_t k,
                                 const std::string* exclude_family = nullptr);

// Standard run-file line: "topic Q0 family rank score tag".
void write_run_lines(std::ostream& out, const std::string& topic_id,
                     const std::vector<SearchResult>& results,
                     const std::string& run_tag);

// Versioned JSON snapshot of the index (internal format, version 1).
void write_index_snapshot(const InvertedIndex& index, std::ostream& out);

}  // namespace clst

#endif

#include "clst/search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

#include "clst/text.hpp"

namespace clst {

InvertedIndex InvertedIndex::build(const Corpus& corpus) {
  InvertedIndex index;
  // Sorted doc order keeps postings sorted by doc_id without a second pass.
  std::vector<const ClaimDocument*> docs;
  for (const ClaimDocument& doc : corpus.documents()) {
    if (doc.language != "en") {
      ++index.skipped_non_english_;
      continue;
    }
    docs.push_back(&doc);
  }
  std::sort(docs.begin(), docs.end(),
            [](const ClaimDocument* a, const ClaimDocument* b) {
              return a->doc_id < b->doc_id;
            });
  for (const ClaimDocument* doc : docs) {
    std::size_t idx = index.doc_ids_.size();
    index.doc_ids_.push_back(doc->doc_id);
    index.families_.push_back(doc->family_id);
    index.by_id_[doc->doc_id] = idx;
    std::map<std::string, int> tf;
    std::size_t length = 0;
    for (const Claim& claim : doc->claims) {
      for (std::string& term : tokenize_and_filter(claim.text)) {
        ++tf[term];
        ++length;
      }
    }
    index.lengths_.push_back(length);
    for (auto& [term, freq] : tf) index.postings_[term].push_back({idx, freq});
  }
  return index;
}

std::size_t InvertedIndex::doc_freq(const std::string& term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? 0 : it->second.size();
}

const std::vector<InvertedIndex::Posting>* InvertedIndex::postings(
    const std::string& term) const {
  auto it = postings_.find(term);
  return it == postings_.end() ? nullptr : &it->second;
}

std::size_t InvertedIndex::doc_index(const std::string& doc_id) const {
  auto it = by_id_.find(doc_id);
  if (it == by_id_.end())
    throw std::out_of_range("unknown doc_id: " + doc_id);
  return it->second;
}

namespace {

double idf_of(const InvertedIndex& index, const std::string& term) {
  return 1.0 + std::log(static_cast<double>(index.num_docs()) /
                        static_cast<double>(index.doc_freq(term) + 1));
}

int term_freq_in(const InvertedIndex& index, const std::string& term,
                 std::size_t doc) {
  const auto* list = index.postings(term);
  if (!list) return 0;
  auto it = std::lower_bound(list->begin(), list->end(), doc,
                             [](const InvertedIndex::Posting& p,
                                std::size_t d) { return p.doc < d; });
  if (it == list->end() || it->doc != doc) return 0;
  return it->freq;
}

}  // namespace

ScoreBreakdown score_doc_breakdown(const InvertedIndex& index,
                                   const QuerySpec& query,
                                   const std::string& doc_id) {
  std::size_t doc = index.doc_index(doc_id);
  ScoreBreakdown breakdown;
  double norm = index.field_length(doc) > 0
                    ? 1.0 / std::sqrt(static_cast<double>(index.field_length(doc)))
                    : 0.0;
  double sum_sq = 0.0;
  double dot = 0.0;
  std::size_t overlap = 0;
  for (const QueryTerm& qt : query.terms) {
    TermFactors f;
    f.term = qt.word;
    f.boost = qt.boost;
    f.idf = idf_of(index, qt.word);
    sum_sq += f.idf * f.idf * qt.boost * qt.boost;
    int freq = term_freq_in(index, qt.word, doc);
    if (freq > 0) {
      f.present = true;
      ++overlap;
      f.tf = std::sqrt(static_cast<double>(freq));
      f.norm = norm;
      dot += f.tf * f.idf * f.idf * f.boost * f.norm;
    }
    breakdown.terms.push_back(std::move(f));
  }
  breakdown.coord = query.terms.empty()
                        ? 0.0
                        : static_cast<double>(overlap) / query.terms.size();
  breakdown.query_norm = sum_sq > 0.0 ? 1.0 / std::sqrt(sum_sq) : 0.0;
  breakdown.total = breakdown.coord * breakdown.query_norm * dot;
  return breakdown;
}

double score_doc(const InvertedIndex& index, const QuerySpec& query,
                 const std::string& doc_id) {
  return score_doc_breakdown(index, query, doc_id).total;
}

std::vector<SearchResult> search(const InvertedIndex& index,
                                 const QuerySpec& query, std::size_t k,
                                 const std::string* exclude_family) {
  std::vector<SearchResult> out;
  if (query.terms.empty()) return out;

  // Term-at-a-time accumulation over the posting union; a document that
  // matches no term is never a candidate, so coord > 0 for all scored docs.
  std::map<std::size_t, double> dot;
  std::map<std::size_t, std::size_t> overlap;
  double sum_sq = 0.0;
  for (const QueryTerm& qt : query.terms) {
    double idf = idf_of(index, qt.word);
    sum_sq += idf * idf * qt.boost * qt.boost;
    const auto* list = index.postings(qt.word);
    if (!list) continue;
    for (const InvertedIndex::Posting& p : *list) {
      double norm =
          index.field_length(p.doc) > 0
              ? 1.0 / std::sqrt(static_cast<double>(index.field_length(p.doc)))
              : 0.0;
      dot[p.doc] += std::sqrt(static_cast<double>(p.freq)) * idf * idf *
                    qt.boost * norm;
      ++overlap[p.doc];
    }
  }
  double query_norm = sum_sq > 0.0 ? 1.0 / std::sqrt(sum_sq) : 0.0;

  // Family deduplication: keep the best-scoring member. Ties inside a
  // family keep the lexicographically first doc_id (map order).
  std::map<std::string, std::pair<double, std::string>> best_by_family;
  for (const auto& [doc, d] : dot) {
    double coord =
        static_cast<double>(overlap[doc]) / static_cast<double>(query.terms.size());
    double score = coord * query_norm * d;
    const std::string& family = index.family_of(doc);
    if (exclude_family && family == *exclude_family) continue;
    auto it = best_by_family.find(family);
    if (it == best_by_family.end() || score > it->second.first) {
      best_by_family[family] = {score, index.doc_ids()[doc]};
    }
  }

  out.reserve(best_by_family.size());
  for (const auto& [family, entry] : best_by_family) {
    out.push_back({family, entry.second, entry.first, 0});
  }
  std::sort(out.begin(), out.end(),
            [](const SearchResult& a, const SearchResult& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.family_id < b.family_id;
            });
  if (out.size() > k) out.resize(k);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].rank = static_cast<int>(i) + 1;
  return out;
}

void write_index_snapshot(const InvertedIndex& index, std::ostream& out) {
  nlohmann::ordered_json docs = nlohmann::ordered_json::array();
  for (std::size_t d = 0; d < index.num_docs(); ++d) {
    docs.push_back({{"id", index.doc_ids()[d]},
                    {"family", index.family_of(d)},
                    {"length", index.field_length(d)}});
  }
  nlohmann::ordered_json postings = nlohmann::ordered_json::object();
  for (const auto& [term, list] : index.all_postings()) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& p : list) entries.push_back({p.doc, p.freq});
    postings[term] = std::move(entries);
  }
  nlohmann::ordered_json snapshot{{"format", "clst-index"},
                                  {"version", 1},
                                  {"num_docs", index.num_docs()},
                                  {"docs", std::move(docs)},
                                  {"postings", std::move(postings)}};
  out << snapshot.dump(2) << "\n";
}

void write_run_lines(std::ostream& out, const std::string& topic_id,
                     const std::vector<SearchResult>& results,
                     const std::string& run_tag) {
  char score_buf[32];
  for (const SearchResult& r : results) {
    std::snprintf(score_buf, sizeof(score_buf), "%.6f", r.score);
    out << topic_id << " Q0 " << r.family_id << " " << r.rank << " "
        << score_buf << " " << run_tag << "\n";
  }
}

}  // namespace clst

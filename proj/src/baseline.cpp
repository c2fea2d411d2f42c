#include "clst/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "clst/text.hpp"

namespace clst {

CollectionStats collection_stats(const Corpus& corpus) {
  CollectionStats stats;
  for (const ClaimDocument& doc : corpus.documents()) {
    if (doc.language != "en") continue;
    ++stats.num_docs;
    std::set<std::string> seen;
    for (const Claim& claim : doc.claims) {
      for (std::string& term : tokenize_and_filter(claim.text))
        seen.insert(std::move(term));
    }
    for (const std::string& term : seen) ++stats.doc_freq[term];
  }
  return stats;
}

QuerySpec tfidf_keywords(const ClaimDocument& doc, const CollectionStats& stats,
                         std::size_t k) {
  std::map<std::string, int> tf;
  for (const Claim& claim : doc.claims) {
    for (std::string& term : tokenize_and_filter(claim.text)) ++tf[term];
  }
  struct Scored {
    std::string term;
    double score;
  };
  std::vector<Scored> scored;
  scored.reserve(tf.size());
  for (const auto& [term, count] : tf) {
    auto df_it = stats.doc_freq.find(term);
    std::size_t df = df_it == stats.doc_freq.end() ? 0 : df_it->second;
    double idf = std::log(static_cast<double>(stats.num_docs) /
                          static_cast<double>(df + 1));
    scored.push_back({term, count * idf});
  }
  std::sort(scored.begin(), scored.end(), [](const Scored& a, const Scored& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.term < b.term;
  });
  if (scored.size() > k) scored.resize(k);

  QuerySpec query;
  query.terms.reserve(scored.size());
  for (Scored& s : scored) query.terms.push_back({std::move(s.term), 1.0});
  return query;
}

}  // namespace clst

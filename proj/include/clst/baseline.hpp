// tf-idf keyword extraction over a document's claims; the comparison
// system for the tree-based scorers. Uses the same tokenizer and
// stopword list as the rest of the pipeline.

#ifndef CLST_BASELINE_HPP
#define CLST_BASELINE_HPP

#include <cstddef>
#include <string>
#include <unordered_map>

#include "clst/corpus.hpp"
#include "clst/scoring.hpp"

namespace clst {

struct CollectionStats {
  std::size_t num_docs = 0;
  std::unordered_map<std::string, std::size_t> doc_freq;
};

// Built over the claims fields of every processed document.
CollectionStats collection_stats(const Corpus& corpus);

// Top-k claim terms by tf * ln(num_docs / (doc_freq + 1)), ties
// lexicographic; all boosts 1.0.
QuerySpec tfidf_keywords(const ClaimDocument& doc, const CollectionStats& stats,
                         std::size_t k = 70);

}  // namespace clst

#endif

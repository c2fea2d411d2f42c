// Stem-level keyword scoring. Words sharing a Porter stem pool their
// tree positions; a stem's score favors occurrences deep in the
// specialization tree (alpha) and in deep claims (beta). The top-n stems
// become the query, each represented by its most frequent surface word.

#ifndef CLST_SCORING_HPP
#define CLST_SCORING_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "clst/spec_tree.hpp"

namespace clst {

struct StemProfile {
  std::string stem;
  std::string representative;           // most frequent word, ties lexicographic
  std::map<std::string, int> occurrences;  // per surface word
  std::vector<WordPosition> positions;  // multiset P(s)
};

struct ScoredStem {
  StemProfile profile;
  double score = 0.0;
};

enum class Method { clst05, clst06, baseline };

struct ScoringParams {
  double alpha = 0.0;
  double beta = 0.0;
  Method method = Method::clst05;
  int top_n = 100;
};

std::vector<StemProfile> aggregate_stems(const PositionIndex& index);

// sum over P(s) of exp(alpha * nd/(nd+nh-1) + beta * cd).
// Throws std::invalid_argument on an empty multiset.
double clst05(std::span<const WordPosition> positions, double alpha,
              double beta);

// |P(s)| * exp(alpha * max nd + beta * max cd), maxima over the multiset.
double clst06(std::span<const WordPosition> positions, double alpha,
              double beta);

std::vector<ScoredStem> score_stems(std::vector<StemProfile> profiles,
                                    const ScoringParams& params);

// n highest scores, descending; ties broken by lexicographic stem.
std::vector<ScoredStem> select_top_n(std::vector<ScoredStem> scored,
                                     std::size_t n);

struct QueryTerm {
  std::string word;
  double boost = 1.0;
};

struct QuerySpec {
  std::vector<QueryTerm> terms;
};

// Representatives in score order. Boosted queries scale scores so the
// maximum boost is 10.0; unboosted terms all carry 1.0.
QuerySpec build_query(const std::vector<ScoredStem>& top, bool boosted);

}  // namespace clst

#endif

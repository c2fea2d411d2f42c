#include "clst/scoring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "clst/porter.hpp"

namespace clst {

namespace {

// Exponent clamp; keeps pathological trees from overflowing a double.
double safe_exp(double x) { return std::exp(std::min(x, 700.0)); }

}  // namespace

std::vector<StemProfile> aggregate_stems(const PositionIndex& index) {
  std::map<std::string, StemProfile> by_stem;
  for (const auto& [word, positions] : index) {
    std::string stem = porter_stem(word);
    StemProfile& profile = by_stem[stem];
    profile.stem = stem;
    profile.occurrences[word] += static_cast<int>(positions.size());
    profile.positions.insert(profile.positions.end(), positions.begin(),
                             positions.end());
  }
  std::vector<StemProfile> out;
  out.reserve(by_stem.size());
  for (auto& [stem, profile] : by_stem) {
    int best = 0;
    for (const auto& [word, count] : profile.occurrences) {
      // map iteration is lexicographic, so ">" keeps the first of ties
      if (count > best) {
        best = count;
        profile.representative = word;
      }
    }
    out.push_back(std::move(profile));
  }
  return out;
}

double clst05(std::span<const WordPosition> positions, double alpha,
              double beta) {
  if (positions.empty())
    throw std::invalid_argument("clst05: empty position multiset");
  double sum = 0.0;
  for (const WordPosition& p : positions) {
    double ratio = static_cast<double>(p.nd) / (p.nd + p.nh - 1);
    sum += safe_exp(alpha * ratio + beta * p.cd);
  }
  return sum;
}

double clst06(std::span<const WordPosition> positions, double alpha,
              double beta) {
  if (positions.empty())
    throw std::invalid_argument("clst06: empty position multiset");
  int max_nd = 0, max_cd = 0;
  for (const WordPosition& p : positions) {
    max_nd = std::max(max_nd, p.nd);
    max_cd = std::max(max_cd, p.cd);
  }
  return static_cast<double>(positions.size()) *
         safe_exp(alpha * max_nd + beta * max_cd);
}

std::vector<ScoredStem> score_stems(std::vector<StemProfile> profiles,
                                    const ScoringParams& params) {
  std::vector<ScoredStem> out;
  out.reserve(profiles.size());
  for (StemProfile& p : profiles) {
    double score = params.method == Method::clst06
                       ? clst06(p.positions, params.alpha, params.beta)
                       : clst05(p.positions, params.alpha, params.beta);
    out.push_back({std::move(p), score});
  }
  return out;
}

std::vector<ScoredStem> select_top_n(std::vector<ScoredStem> scored,
                                     std::size_t n) {
  std::sort(scored.begin(), scored.end(),
            [](const ScoredStem& a, const ScoredStem& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.profile.stem < b.profile.stem;
            });
  if (scored.size() > n) scored.resize(n);
  return scored;
}

QuerySpec build_query(const std::vector<ScoredStem>& top, bool boosted) {
  QuerySpec query;
  query.terms.reserve(top.size());
  double max_score = 0.0;
  for (const ScoredStem& s : top) max_score = std::max(max_score, s.score);
  for (const ScoredStem& s : top) {
    double boost = 1.0;
    if (boosted && max_score > 0.0) boost = 10.0 * s.score / max_score;
    query.terms.push_back({s.profile.representative, boost});
  }
  return query;
}

}  // namespace clst

#include "clst/eval.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

namespace clst {

namespace {

void check_outcome(const TopicOutcome& o) {
  if (o.n <= 0)
    throw std::invalid_argument("topic " + o.topic_doc_id +
                                " has no relevance judgments");
  if (static_cast<int>(o.ranks_of_relevant.size()) > o.n)
    throw std::invalid_argument("more retrieved relevant than n");
  int prev = 0;
  for (int r : o.ranks_of_relevant) {
    if (r <= prev || r > o.n_max)
      throw std::invalid_argument("ranks must be distinct, ascending and "
                                  "within the cutoff");
    prev = r;
  }
}

double pres_from_rank_sum(double rank_sum, int n, int n_max) {
  return 1.0 - (rank_sum / n - (n + 1) / 2.0) / n_max;
}

}  // namespace

double recall_at(const TopicOutcome& outcome) {
  check_outcome(outcome);
  return static_cast<double>(outcome.ranks_of_relevant.size()) / outcome.n;
}

double pres_at(const TopicOutcome& outcome) {
  check_outcome(outcome);
  int nr = static_cast<int>(outcome.ranks_of_relevant.size());
  double rank_sum = 0.0;
  for (int r : outcome.ranks_of_relevant) rank_sum += r;
  // Missing documents take the synthetic ranks just past the cutoff,
  // counted from N_max + n downwards.
  for (int i = nr + 1; i <= outcome.n; ++i)
    rank_sum += outcome.n_max + outcome.n - (i - nr - 1);
  return pres_from_rank_sum(rank_sum, outcome.n, outcome.n_max);
}

double pres_original(const TopicOutcome& outcome) {
  check_outcome(outcome);
  double nr = static_cast<double>(outcome.ranks_of_relevant.size());
  double rank_sum = 0.0;
  for (int r : outcome.ranks_of_relevant) rank_sum += r;
  rank_sum += nr * (outcome.n_max + outcome.n) - nr * (nr - 1.0) / 2.0;
  return pres_from_rank_sum(rank_sum, outcome.n, outcome.n_max);
}

double randomization_test(std::span<const double> per_topic_a,
                          std::span<const double> per_topic_b, int iterations,
                          std::uint64_t seed) {
  if (per_topic_a.size() != per_topic_b.size())
    throw std::invalid_argument("paired lists differ in length");
  if (per_topic_a.empty())
    throw std::invalid_argument("randomization test needs at least one pair");
  if (iterations <= 0)
    throw std::invalid_argument("iterations must be positive");

  const std::size_t n = per_topic_a.size();
  std::vector<double> diff(n);
  double observed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    diff[i] = per_topic_a[i] - per_topic_b[i];
    observed += diff[i];
  }
  observed = std::abs(observed / n);

  std::mt19937_64 rng(seed);
  std::uint64_t bits = 0;
  int bits_left = 0;
  long hits = 0;
  for (int it = 0; it < iterations; ++it) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (bits_left == 0) {
        bits = rng();
        bits_left = 64;
      }
      sum += (bits & 1) ? diff[i] : -diff[i];
      bits >>= 1;
      --bits_left;
    }
    if (std::abs(sum / n) >= observed - 1e-12) ++hits;
  }
  return static_cast<double>(1 + hits) / (1 + iterations);
}

GridResult grid_search(std::span<const double> alpha_grid,
                       std::span<const double> beta_grid,
                       const std::function<double(double, double)>& objective) {
  if (alpha_grid.empty() || beta_grid.empty())
    throw std::invalid_argument("grid_search: empty grid");
  std::vector<double> alphas(alpha_grid.begin(), alpha_grid.end());
  std::vector<double> betas(beta_grid.begin(), beta_grid.end());
  std::sort(alphas.begin(), alphas.end());
  std::sort(betas.begin(), betas.end());
  GridResult result;
  bool first = true;
  double best = 0.0;
  // Ascending iteration plus strict improvement = ties keep the smaller
  // alpha, then the smaller beta.
  for (double alpha : alphas) {
    for (double beta : betas) {
      double value = objective(alpha, beta);
      result.table.push_back({alpha, beta, value});
      if (first || value > best) {
        first = false;
        best = value;
        result.best_alpha = alpha;
        result.best_beta = beta;
      }
    }
  }
  return result;
}

}  // namespace clst

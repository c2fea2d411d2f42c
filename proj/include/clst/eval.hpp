// Retrieval evaluation: Recall@K, PRES@K with the corrected missing-rank
// sum, the uncorrected original formula (kept as a reference for the
// defect it has), a paired sign-flip randomization test, and grid search.
//
// PRES = 1 - (sum(r_i)/n - (n+1)/2) / N_max, with relevant documents not
// retrieved within the cutoff assigned the synthetic ranks
// N_max+n, N_max+n-1, ... (corrected form). The original form adds
// nR*(N_max+n) - nR*(nR-1)/2 instead, which leaves PRES above 1 when
// nothing is retrieved.

#ifndef CLST_EVAL_HPP
#define CLST_EVAL_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace clst {

struct TopicOutcome {
  std::string topic_doc_id;
  std::vector<int> ranks_of_relevant;  // ascending, 1-based, <= n_max
  int n = 0;                           // total relevant families
  int n_max = 100;                     // evaluation cutoff
};

// |retrieved relevant| / n. Throws std::invalid_argument when n == 0.
double recall_at(const TopicOutcome& outcome);

// Corrected PRES; in [0, 1] for all valid outcomes.
double pres_at(const TopicOutcome& outcome);

// Literal original formula; intentionally unvalidated against [0, 1].
double pres_original(const TopicOutcome& outcome);

// Two-sided paired sign-flip randomization test on the mean difference.
// p = (1 + #{flips with |mean| >= |observed|}) / (1 + iterations).
// Deterministic for a fixed seed. Throws on length mismatch.
double randomization_test(std::span<const double> per_topic_a,
                          std::span<const double> per_topic_b,
                          int iterations, std::uint64_t seed);

struct GridPoint {
  double alpha = 0.0;
  double beta = 0.0;
  double mean_pres = 0.0;
};

struct GridResult {
  double best_alpha = 0.0;
  double best_beta = 0.0;
  std::vector<GridPoint> table;
};

// Evaluates objective(alpha, beta) (mean PRES@N_max by convention) on
// every grid point; argmax with ties broken by smaller alpha, then beta.
GridResult grid_search(std::span<const double> alpha_grid,
                       std::span<const double> beta_grid,
                       const std::function<double(double, double)>& objective);

}  // namespace clst

#endif

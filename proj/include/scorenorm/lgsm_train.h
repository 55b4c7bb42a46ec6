// include/scorenorm/lgsm_train.h

// Copyright 2026  The scorenorm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef SCORENORM_LGSM_TRAIN_H_
#define SCORENORM_LGSM_TRAIN_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "scorenorm/lgsm_params.h"
#include "scorenorm/lgsm_posterior.h"
#include "scorenorm/score_data.h"

namespace scorenorm {

/// Expected statistics of the regression of s_ij on w = [1; x_i; y_j] over
/// the cells of one class.
struct ClassStats {
  Eigen::MatrixXd ww;  // sum E[w w']
  Eigen::VectorXd sw;  // sum s E[w]
  double ss = 0.0;     // sum s^2
  double count = 0.0;
};

/// Everything the M-step and the minimum-divergence step need, summed over
/// any number of score matrices (equal weight per cell).
struct SufficientStats {
  explicit SufficientStats(int dim);

  /// Adds the cells of one matrix, using its posterior moments.
  void Accumulate(const PosteriorMoments &moments, const LabeledMatrix &grid);

  const ClassStats &For(Hypothesis h) const {
    return h == Hypothesis::kTarget ? target : nontarget;
  }

  int dim;
  ClassStats target, nontarget;
  Eigen::MatrixXd x_second_sum, y_second_sum;
  std::size_t x_count = 0, y_count = 0;
  double log_marginal = 0.0;
};

/// E-step over a collection of matrices, accumulated in input order.
SufficientStats CollectStats(const LgsmParams &params,
                             std::span<const LabeledMatrix> matrices);

/// Parameter-dependent part of the expected complete-data log-likelihood:
/// sum over classes of -1/2 [(ss - 2 theta'sw + theta'ww theta) / var +
/// count log(2 pi var)], theta = (mean, alpha, beta).
double ExpectedDataLogLik(const SufficientStats &stats,
                          const LgsmParams &params);

/// Per class, (mean, alpha, beta) from the expected normal equations and the
/// variance from the expected residual (floored at kVarianceFloor). A
/// singular system is retried once with a small ridge on the loading block.
/// Throws TrainingError if a class has no cells.
LgsmParams MStep(const SufficientStats &stats);

/// Minimum-divergence re-standardization. The averaged posterior second
/// moments S_x (over all rows) and S_y (over all columns) are whitened by
/// their symmetric square roots, which are absorbed into the loadings:
/// alpha_h <- S_x^{1/2} alpha_h and beta_h <- S_y^{1/2} beta_h. A moment
/// matrix that is not positive definite is left alone and a warning is
/// appended to *warnings.
LgsmParams MinDivStep(const LgsmParams &params, const SufficientStats &stats,
                      std::vector<std::string> *warnings = nullptr);

struct EmConfig {
  double tol = 1e-8;
  int max_iters = 500;
  std::uint64_t seed = 0;
  bool min_div = true;
};

struct TrainTrace {
  /// Training log-likelihood of the initial parameters followed by the
  /// value after each update.
  std::vector<double> log_likelihood;
  bool converged = false;
  int iterations = 0;
  std::vector<std::string> warnings;
};

struct EmResult {
  LgsmParams params;
  TrainTrace trace;
};

/// Class means and ML variances of the raw scores; loadings drawn from a
/// seeded N(0, (0.1 sigma_h)^2).
LgsmParams InitParams(std::span<const LabeledMatrix> matrices, int dim,
                      std::uint64_t seed);

/// EM with minimum divergence until the relative change of the training
/// log-likelihood drops below config.tol or config.max_iters updates ran.
EmResult EmFit(std::span<const LabeledMatrix> matrices, int dim,
               const EmConfig &config);
EmResult EmFit(std::span<const LabeledMatrix> matrices,
               const LgsmParams &init, const EmConfig &config);

}  // namespace scorenorm

#endif  // SCORENORM_LGSM_TRAIN_H_

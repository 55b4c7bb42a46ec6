// include/scorenorm/lgsm_posterior.h

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

#ifndef SCORENORM_LGSM_POSTERIOR_H_
#define SCORENORM_LGSM_POSTERIOR_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "scorenorm/lgsm_params.h"
#include "scorenorm/score_data.h"

namespace scorenorm {

/// Gaussian posterior over the stacked hidden variables z = (x_1..x_K,
/// y_1..y_L) of one score matrix. With precision P = [A C; C' B] and
/// gamma = (gamma_x, gamma_y), the posterior mean solves P * mean = gamma.
/// Only observed cells contribute to A, B, C and gamma.
struct PosteriorSummary {
  std::size_t rows = 0, cols = 0;
  int dim = 0;
  Eigen::MatrixXd precision;
  Eigen::VectorXd gamma;
  Eigen::VectorXd mean;
  Eigen::LLT<Eigen::MatrixXd> cholesky;
  double log_det_precision = 0.0;
  /// -1/2 sum over observed cells of (s - mu)^2 / var + log(2 pi var).
  double data_term = 0.0;
  /// log P(scores | labels), by the candidate's formula.
  double log_marginal = 0.0;

  Eigen::Index XOffset(std::size_t i) const { return Eigen::Index(i) * dim; }
  Eigen::Index YOffset(std::size_t j) const {
    return Eigen::Index(rows + j) * dim;
  }
  Eigen::VectorXd XMean(std::size_t i) const {
    return mean.segment(XOffset(i), dim);
  }
  Eigen::VectorXd YMean(std::size_t j) const {
    return mean.segment(YOffset(j), dim);
  }
};

/// Builds and factorizes the hidden-variable posterior. Throws
/// NumericalError when the precision is not positive definite even after a
/// single 1e-10 diagonal jitter.
PosteriorSummary BuildPosterior(const LgsmParams &params,
                                const LabeledMatrix &grid);

/// Marginal log-likelihood of all observed scores given their labels:
///   data_term + 1/2 mean' P mean - 1/2 log|P|.
double LogMarginal(const LgsmParams &params, const LabeledMatrix &grid);

/// First and second posterior moments of the hidden variables.
struct PosteriorMoments {
  std::size_t rows = 0, cols = 0;
  int dim = 0;
  std::vector<Eigen::VectorXd> x_mean, y_mean;
  std::vector<Eigen::MatrixXd> x_second, y_second;  // E[x x'], E[y y']
  std::vector<Eigen::MatrixXd> cross_second;        // E[x_i y_j'], row-major
  double log_marginal = 0.0;

  const Eigen::MatrixXd &Cross(std::size_t i, std::size_t j) const {
    return cross_second[i * cols + j];
  }
};

/// Posterior moments from a factorized posterior. Covariance blocks come
/// from the inverse precision, obtained by column solves on its Cholesky
/// factor.
PosteriorMoments ComputeMoments(const PosteriorSummary &posterior);

PosteriorMoments EStep(const LgsmParams &params, const LabeledMatrix &grid);

/// Process-wide count of posterior-precision factorizations.
std::uint64_t PrecisionFactorizationCount();

}  // namespace scorenorm

#endif  // SCORENORM_LGSM_POSTERIOR_H_

// src/lgsm_scoring.cc

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

#include "scorenorm/lgsm_scoring.h"

#include <cmath>
#include <string>

#include "lgsm_internal.h"
#include "scorenorm/errors.h"
#include "scorenorm/lgsm_posterior.h"

namespace scorenorm {

double NormalizeTrial(const LgsmParams &params, const TrialContext &ctx) {
  return LogMarginal(params, AssembleRuntimeGrid(ctx, Hypothesis::kTarget)) -
         LogMarginal(params, AssembleRuntimeGrid(ctx, Hypothesis::kNontarget));
}

BatchScorer::BatchScorer(const LgsmParams &params, const ScoreMatrix &inter,
                         const LabelMatrix &cohort_labels)
    : params_(params) {
  params_.Validate();
  const std::size_t n = inter.rows(), m = inter.cols();
  if (cohort_labels.rows() != n + 1 || cohort_labels.cols() != m + 1)
    throw ShapeError("cohort labels must cover the (N+1)x(M+1) grid");
  grid_.scores = ScoreMatrix(n + 1, m + 1);
  grid_.labels = cohort_labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) grid_.scores(i, j) = inter(i, j);

  for (auto [factor, h] : {std::pair{&target_, Hypothesis::kTarget},
                           std::pair{&nontarget_, Hypothesis::kNontarget}}) {
    factor->labels = cohort_labels;
    factor->labels(n, m) = ToLabel(h);
    factor->cholesky = internal::FactorPrecision(
        internal::BuildPrecision(params_, factor->labels));
    factor->log_det = internal::LogDetFromCholesky(factor->cholesky);
  }
}

double BatchScorer::LogMarginal(const Factor &factor,
                                const ScoreMatrix &scores) const {
  LabeledMatrix grid{scores, factor.labels};
  Eigen::VectorXd gamma;
  double data_term;
  internal::AccumulateGamma(params_, grid, &gamma, &data_term);
  const Eigen::VectorXd mean = factor.cholesky.solve(gamma);
  return data_term + 0.5 * gamma.dot(mean) - 0.5 * factor.log_det;
}

double BatchScorer::Score(const TrialScores &trial) const {
  const std::size_t n = num_enroll_cohort(), m = num_test_cohort();
  if (trial.enroll_side.size() != m || trial.test_side.size() != n)
    throw ShapeError("trial cohort scores do not match the batch cohort (N=" +
                     std::to_string(n) + ", M=" + std::to_string(m) + ")");
  ScoreMatrix scores = grid_.scores;
  for (std::size_t i = 0; i < n; ++i) scores(i, m) = trial.test_side[i];
  for (std::size_t j = 0; j < m; ++j) scores(n, j) = trial.enroll_side[j];
  scores(n, m) = trial.trial_score;
  LabeledMatrix check{scores, target_.labels};
  check.Validate();
  const double llr =
      LogMarginal(target_, scores) - LogMarginal(nontarget_, scores);
  if (!std::isfinite(llr)) throw NumericalError("non-finite normalized score");
  return llr;
}

std::vector<double> BatchScorer::Score(
    std::span<const TrialScores> trials) const {
  std::vector<double> out;
  out.reserve(trials.size());
  for (const TrialScores &t : trials) out.push_back(Score(t));
  return out;
}

std::vector<double> NormalizeBatch(const LgsmParams &params,
                                   const ScoreMatrix &inter,
                                   const LabelMatrix &cohort_labels,
                                   std::span<const TrialScores> trials) {
  return BatchScorer(params, inter, cohort_labels).Score(trials);
}

double TargetPosterior(double normalized_score, const Prior &prior) {
  const double x = normalized_score + prior.Logit();
  if (x >= 0.0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace scorenorm

// include/scorenorm/lgsm_scoring.h

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

#ifndef SCORENORM_LGSM_SCORING_H_
#define SCORENORM_LGSM_SCORING_H_

#include <span>
#include <vector>

#include <Eigen/Cholesky>

#include "scorenorm/lgsm_params.h"
#include "scorenorm/score_data.h"

namespace scorenorm {

/// Normalized score of one trial: the log-likelihood-ratio
///   LogMarginal(grid | trial target) - LogMarginal(grid | trial nontarget)
/// over the assembled runtime grid.
double NormalizeTrial(const LgsmParams &params, const TrialContext &ctx);

/// The per-trial part of a TrialContext.
struct TrialScores {
  double trial_score = 0.0;
  std::vector<double> enroll_side;  // length M
  std::vector<double> test_side;    // length N
};

/// Scores many trials against one fixed cohort. The posterior precision
/// depends only on the labels, so it is factorized once per trial
/// hypothesis at construction; each trial afterwards costs two triangular
/// solves. Results are identical to NormalizeTrial on the same context.
class BatchScorer {
 public:
  /// cohort_labels covers the (N+1) x (M+1) runtime grid; its last row and
  /// column are shared by every trial and its trial cell is ignored.
  BatchScorer(const LgsmParams &params, const ScoreMatrix &inter,
              const LabelMatrix &cohort_labels);

  double Score(const TrialScores &trial) const;
  std::vector<double> Score(std::span<const TrialScores> trials) const;

  std::size_t num_enroll_cohort() const { return grid_.rows() - 1; }
  std::size_t num_test_cohort() const { return grid_.cols() - 1; }

 private:
  struct Factor {
    Eigen::LLT<Eigen::MatrixXd> cholesky;
    double log_det = 0.0;
    LabelMatrix labels;
  };
  double LogMarginal(const Factor &factor, const ScoreMatrix &scores) const;

  LgsmParams params_;
  LabeledMatrix grid_;
  Factor target_, nontarget_;
};

std::vector<double> NormalizeBatch(const LgsmParams &params,
                                   const ScoreMatrix &inter,
                                   const LabelMatrix &cohort_labels,
                                   std::span<const TrialScores> trials);

/// P(target | normalized score, prior) = sigmoid(score + logit(pi)).
double TargetPosterior(double normalized_score, const Prior &prior);

}  // namespace scorenorm

#endif  // SCORENORM_LGSM_SCORING_H_

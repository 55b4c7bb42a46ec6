// include/scorenorm/synthetic.h

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

#ifndef SCORENORM_SYNTHETIC_H_
#define SCORENORM_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "scorenorm/lgsm_params.h"
#include "scorenorm/lgsm_scoring.h"
#include "scorenorm/score_data.h"

namespace scorenorm {

/// Which cells of a generated matrix are targets.
struct TargetLayout {
  enum class Kind { kDiagonal, kBlockDiagonal, kAllNontarget };
  Kind kind = Kind::kDiagonal;
  /// Side of the diagonal blocks for kBlockDiagonal.
  std::size_t block = 1;

  Label LabelAt(std::size_t i, std::size_t j) const;
  /// "diagonal", "block:<b>" or "none".
  static TargetLayout Parse(const std::string &text);
  std::string ToString() const;
};

struct CorpusSpec {
  std::size_t n_matrices = 30;
  std::size_t rows = 50, cols = 50;
  TargetLayout layout;
  std::uint64_t seed = 0;

  /// Throws ValidationError for an empty corpus or empty matrices.
  void Validate() const;
};

/// One matrix from the model: x_i, y_j ~ N(0, I), then
/// s_ij ~ N(mean_h + alpha_h'x_i + beta_h'y_j, var_h) with h from layout.
LabeledMatrix SampleMatrix(const LgsmParams &params, std::size_t rows,
                           std::size_t cols, const TargetLayout &layout,
                           std::uint64_t seed);

/// Matrix m is SampleMatrix(..., DeriveSeed(spec.seed, m)).
std::vector<LabeledMatrix> SampleCorpus(const LgsmParams &params,
                                        const CorpusSpec &spec);

/// Evaluation trials sharing one cohort. The N enrollment and M test cohort
/// items have their own hidden variables and all cohort scores are
/// nontarget; every trial draws a fresh enrollment and test item, so its
/// enroll_side, test_side and trial score share those hidden variables.
struct EvalSet {
  ScoreMatrix inter;
  LabelMatrix cohort_labels;  // (N+1) x (M+1), all nontarget
  std::vector<TrialScores> trials;
  std::vector<Hypothesis> labels;

  TrialContext Context(std::size_t k) const;
};

/// Targets come first, then nontargets. The cohort uses stream 0 of seed and
/// trial k uses stream k + 1.
EvalSet SampleEvalSet(const LgsmParams &params, std::size_t num_enroll_cohort,
                      std::size_t num_test_cohort, std::size_t n_target,
                      std::size_t n_nontarget, std::uint64_t seed);

}  // namespace scorenorm

#endif  // SCORENORM_SYNTHETIC_H_

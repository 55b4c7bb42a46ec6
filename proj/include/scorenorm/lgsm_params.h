// include/scorenorm/lgsm_params.h

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

#ifndef SCORENORM_LGSM_PARAMS_H_
#define SCORENORM_LGSM_PARAMS_H_

#include <cstddef>

#include <Eigen/Dense>

#include "scorenorm/score_data.h"

namespace scorenorm {

/// Residual variances are never allowed below this.
inline constexpr double kVarianceFloor = 1e-6;

/// Per-hypothesis parameters of the linear-Gaussian score model: a cell with
/// this label has score mean + alpha'x_i + beta'y_j plus N(0, variance)
/// noise, where x_i and y_j are the hidden row and column variables.
struct ClassParams {
  double mean = 0.0;
  double variance = 1.0;
  Eigen::VectorXd alpha;  // row (enrollment side) loading
  Eigen::VectorXd beta;   // column (test side) loading

  /// Hidden-variable share of the single-score variance.
  double HiddenVariance() const {
    return alpha.squaredNorm() + beta.squaredNorm();
  }
  double TotalVariance() const { return variance + HiddenVariance(); }

  bool operator==(const ClassParams &other) const;
};

class LgsmParams {
 public:
  LgsmParams() : LgsmParams(0) {}
  /// Zero loadings, zero means, unit variances.
  explicit LgsmParams(int dim);
  LgsmParams(ClassParams target, ClassParams nontarget);

  int dim() const { return dim_; }
  const ClassParams &target() const { return target_; }
  const ClassParams &nontarget() const { return nontarget_; }
  ClassParams &target() { return target_; }
  ClassParams &nontarget() { return nontarget_; }

  /// Parameters that apply to a cell; label must be observed.
  const ClassParams &For(Label label) const;
  const ClassParams &For(Hypothesis h) const {
    return h == Hypothesis::kTarget ? target_ : nontarget_;
  }

  /// Number of trainable scalars, 4 + 4 * dim.
  std::size_t ParameterCount() const { return 4 + 4 * std::size_t(dim_); }

  /// Throws ValidationError on non-positive variances, non-finite values or
  /// loadings whose length differs from dim.
  void Validate() const;

  bool operator==(const LgsmParams &other) const = default;

 private:
  int dim_;
  ClassParams target_, nontarget_;
};

}  // namespace scorenorm

#endif  // SCORENORM_LGSM_PARAMS_H_

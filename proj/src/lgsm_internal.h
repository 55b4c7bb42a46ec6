// src/lgsm_internal.h

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

#ifndef SCORENORM_LGSM_INTERNAL_H_
#define SCORENORM_LGSM_INTERNAL_H_

#include <Eigen/Cholesky>
#include <Eigen/Dense>

#include "scorenorm/lgsm_params.h"
#include "scorenorm/score_data.h"

namespace scorenorm {
namespace internal {

/// Posterior precision of the hidden variables; depends on labels only.
Eigen::MatrixXd BuildPrecision(const LgsmParams &params,
                               const LabelMatrix &labels);

/// Cholesky factor of a precision, with one jitter retry. Counts toward
/// PrecisionFactorizationCount().
Eigen::LLT<Eigen::MatrixXd> FactorPrecision(const Eigen::MatrixXd &precision);

double LogDetFromCholesky(const Eigen::LLT<Eigen::MatrixXd> &llt);

/// gamma and the Gaussian data term over the observed cells of grid.
void AccumulateGamma(const LgsmParams &params, const LabeledMatrix &grid,
                     Eigen::VectorXd *gamma, double *data_term);

}  // namespace internal
}  // namespace scorenorm

#endif  // SCORENORM_LGSM_INTERNAL_H_

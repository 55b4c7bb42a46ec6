// include/scorenorm/classical_norms.h

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

#ifndef SCORENORM_CLASSICAL_NORMS_H_
#define SCORENORM_CLASSICAL_NORMS_H_

#include <span>

#include "scorenorm/score_data.h"

namespace scorenorm {

/// Cohort standard deviations below this are treated as degenerate.
inline constexpr double kMinCohortStd = 1e-12;

struct CohortStats {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, divisor n-1
};

/// Mean and sample standard deviation of a cohort. Throws
/// DegenerateCohortError for fewer than two scores or std < kMinCohortStd.
CohortStats ComputeCohortStats(std::span<const double> cohort);

/// (score - mean) / std against the test-side cohort.
double TNorm(double trial_score, std::span<const double> cohort);

/// Same standardization against the enrollment-side cohort.
double ZNorm(double trial_score, std::span<const double> cohort);

/// Z-then-T composition. The trial score is z-normalized with enroll_side,
/// each test_side[i] is z-normalized with row i of the inter-cohort matrix,
/// and the result is t-normalized against those N z-normalized scores.
double ZTNorm(const TrialContext &ctx);

/// Symmetric average of the two one-sided standardizations.
double SNorm(double trial_score, std::span<const double> enroll_side,
             std::span<const double> test_side);

}  // namespace scorenorm

#endif  // SCORENORM_CLASSICAL_NORMS_H_

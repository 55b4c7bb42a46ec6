// src/classical_norms.cc

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

#include "scorenorm/classical_norms.h"

#include <cmath>
#include <string>
#include <vector>

#include "scorenorm/errors.h"

namespace scorenorm {

CohortStats ComputeCohortStats(std::span<const double> cohort) {
  if (cohort.size() < 2)
    throw DegenerateCohortError("cohort needs at least 2 scores, got " +
                                std::to_string(cohort.size()));
  double sum = 0.0;
  for (double s : cohort) sum += s;
  const double mean = sum / cohort.size();
  double ss = 0.0;
  for (double s : cohort) ss += (s - mean) * (s - mean);
  const double std = std::sqrt(ss / (cohort.size() - 1));
  if (!(std >= kMinCohortStd))
    throw DegenerateCohortError("cohort has zero variance");
  return {mean, std};
}

double TNorm(double trial_score, std::span<const double> cohort) {
  const CohortStats stats = ComputeCohortStats(cohort);
  return (trial_score - stats.mean) / stats.std;
}

double ZNorm(double trial_score, std::span<const double> cohort) {
  return TNorm(trial_score, cohort);
}

double ZTNorm(const TrialContext &ctx) {
  ctx.Validate();
  const std::size_t n = ctx.num_enroll_cohort();
  double z_trial;
  std::vector<double> z_cohort(n);
  try {
    z_trial = ZNorm(ctx.trial_score, ctx.enroll_side);
    for (std::size_t i = 0; i < n; ++i)
      z_cohort[i] = ZNorm(ctx.test_side[i], ctx.inter.row(i));
  } catch (const DegenerateCohortError &e) {
    throw DegenerateCohortError(std::string("ZT-norm Z step: ") + e.what());
  }
  try {
    return TNorm(z_trial, z_cohort);
  } catch (const DegenerateCohortError &e) {
    throw DegenerateCohortError(std::string("ZT-norm T step: ") + e.what());
  }
}

double SNorm(double trial_score, std::span<const double> enroll_side,
             std::span<const double> test_side) {
  return 0.5 * (ZNorm(trial_score, enroll_side) + TNorm(trial_score, test_side));
}

}  // namespace scorenorm

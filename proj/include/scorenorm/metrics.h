// include/scorenorm/metrics.h

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

#ifndef SCORENORM_METRICS_H_
#define SCORENORM_METRICS_H_

#include <vector>

namespace scorenorm {

/// Scores split by true hypothesis. For Cllr they are read as natural-log
/// likelihood ratios.
struct LabeledScores {
  std::vector<double> target;
  std::vector<double> nontarget;

  /// Throws ValidationError for an empty class or a non-finite score.
  void Validate() const;
};

struct DetPoint {
  double pfa = 0.0;
  double pmiss = 0.0;
  bool operator==(const DetPoint &other) const = default;
};

/// Empirical operating points for "accept when score >= threshold", one per
/// distinct score plus the reject-all point, in order of rising threshold:
/// pfa non-increasing, pmiss non-decreasing, from (1, 0) to (0, 1).
std::vector<DetPoint> DetPoints(const LabeledScores &scores);

/// Lower-left convex hull of the DET points (the ROC convex hull), in order
/// of rising threshold.
std::vector<DetPoint> DetConvexHull(const LabeledScores &scores);

/// Equal error rate: where the convex hull crosses pmiss == pfa, linearly
/// interpolated between hull vertices.
double Eer(const LabeledScores &scores);

/// Cllr in bits: 1/(2 ln 2) [mean_tar log(1 + e^-s) + mean_non log(1 + e^s)].
double Cllr(const LabeledScores &llrs);

/// Cllr after the optimal monotone recalibration, found by weighted
/// pool-adjacent-violators over the merged ranking. Tied scores form one
/// pool. Pools that are pure target or pure nontarget map to infinite LLRs
/// and contribute their limit, zero, to the loss.
double MinCllr(const LabeledScores &llrs);

/// Inverse standard normal CDF; -inf at 0 and +inf at 1.
double Probit(double p);

struct MetricsReport {
  double eer = 0.0;
  double cllr = 0.0;
  double min_cllr = 0.0;
  std::vector<DetPoint> det;
};

MetricsReport Evaluate(const LabeledScores &scores);

}  // namespace scorenorm

#endif  // SCORENORM_METRICS_H_

// src/metrics.cc

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

#include "scorenorm/metrics.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <utility>

#include <boost/math/special_functions/erf.hpp>

#include "scorenorm/errors.h"

namespace scorenorm {

namespace {

// log(1 + e^x) without overflow.
double Softplus(double x) {
  return x > 0.0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x));
}

struct RankedGroup {
  double score;
  std::size_t targets = 0, nontargets = 0;
};

// Distinct scores in ascending order with per-class counts.
std::vector<RankedGroup> RankGroups(const LabeledScores &s) {
  std::vector<std::pair<double, bool>> all;
  all.reserve(s.target.size() + s.nontarget.size());
  for (double v : s.target) all.emplace_back(v, true);
  for (double v : s.nontarget) all.emplace_back(v, false);
  std::sort(all.begin(), all.end(),
            [](const auto &a, const auto &b) { return a.first < b.first; });
  std::vector<RankedGroup> groups;
  for (const auto &[v, is_target] : all) {
    if (groups.empty() || groups.back().score != v) groups.push_back({v});
    (is_target ? groups.back().targets : groups.back().nontargets)++;
  }
  return groups;
}

// z-component of (b - a) x (c - a).
double Cross(const DetPoint &a, const DetPoint &b, const DetPoint &c) {
  return (b.pfa - a.pfa) * (c.pmiss - a.pmiss) -
         (b.pmiss - a.pmiss) * (c.pfa - a.pfa);
}

}  // namespace

void LabeledScores::Validate() const {
  if (target.empty()) throw ValidationError("no target scores");
  if (nontarget.empty()) throw ValidationError("no nontarget scores");
  for (const auto *v : {&target, &nontarget})
    for (double s : *v)
      if (!std::isfinite(s)) throw ValidationError("non-finite score");
}

std::vector<DetPoint> DetPoints(const LabeledScores &scores) {
  scores.Validate();
  const std::vector<RankedGroup> groups = RankGroups(scores);
  const double nt = double(scores.target.size());
  const double nn = double(scores.nontarget.size());
  std::vector<DetPoint> out;
  out.reserve(groups.size() + 1);
  std::size_t missed = 0, rejected = 0;
  for (const RankedGroup &g : groups) {
    out.push_back({(nn - rejected) / nn, missed / nt});
    missed += g.targets;
    rejected += g.nontargets;
  }
  out.push_back({0.0, 1.0});
  return out;
}

std::vector<DetPoint> DetConvexHull(const LabeledScores &scores) {
  // Points in order of rising threshold have pfa falling; walk them by rising
  // pfa and keep the lower hull (monotone chain).
  std::vector<DetPoint> pts = DetPoints(scores);
  std::reverse(pts.begin(), pts.end());
  std::vector<DetPoint> hull;
  for (const DetPoint &p : pts) {
    if (!hull.empty() && hull.back() == p) continue;
    while (hull.size() >= 2 &&
           Cross(hull[hull.size() - 2], hull.back(), p) <= 0.0)
      hull.pop_back();
    hull.push_back(p);
  }
  std::reverse(hull.begin(), hull.end());
  return hull;
}

double Eer(const LabeledScores &scores) {
  // Along the hull in order of rising pfa, pmiss - pfa falls from 1 to -1.
  std::vector<DetPoint> hull = DetConvexHull(scores);
  std::reverse(hull.begin(), hull.end());
  for (std::size_t k = 0; k < hull.size(); ++k) {
    const double gap = hull[k].pmiss - hull[k].pfa;
    if (gap > 0.0) continue;
    if (gap == 0.0 || k == 0) return hull[k].pfa;
    const DetPoint &a = hull[k - 1], &b = hull[k];
    const double ga = a.pmiss - a.pfa;
    const double t = ga / (ga - gap);
    return a.pfa + t * (b.pfa - a.pfa);
  }
  return 0.5;  // unreachable: the hull ends at (1, 0)
}

double Cllr(const LabeledScores &llrs) {
  llrs.Validate();
  double tar = 0.0, non = 0.0;
  for (double s : llrs.target) tar += Softplus(-s);
  for (double s : llrs.nontarget) non += Softplus(s);
  tar /= double(llrs.target.size());
  non /= double(llrs.nontarget.size());
  return (tar + non) / (2.0 * std::numbers::ln2);
}

double MinCllr(const LabeledScores &llrs) {
  llrs.Validate();
  const double nt = double(llrs.target.size());
  const double nn = double(llrs.nontarget.size());
  // Each pool holds class weights a = targets / Nt and b = nontargets / Nn;
  // its optimal posterior is a / (a + b), which must be non-decreasing.
  struct Pool {
    double a, b;
  };
  std::vector<Pool> pools;
  for (const RankedGroup &g : RankGroups(llrs)) {
    Pool p{g.targets / nt, g.nontargets / nn};
    while (!pools.empty() &&
           pools.back().a * (p.a + p.b) >= p.a * (pools.back().a + pools.back().b)) {
      p.a += pools.back().a;
      p.b += pools.back().b;
      pools.pop_back();
    }
    pools.push_back(p);
  }
  double loss = 0.0;
  for (const Pool &p : pools) {
    const double total = p.a + p.b;
    if (p.a > 0.0) loss += p.a * std::log(total / p.a);
    if (p.b > 0.0) loss += p.b * std::log(total / p.b);
  }
  return loss / (2.0 * std::numbers::ln2);
}

double Probit(double p) {
  if (!(p > 0.0)) return -std::numeric_limits<double>::infinity();
  if (!(p < 1.0)) return std::numeric_limits<double>::infinity();
  return -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p);
}

MetricsReport Evaluate(const LabeledScores &scores) {
  return {Eer(scores), Cllr(scores), MinCllr(scores), DetPoints(scores)};
}

}  // namespace scorenorm

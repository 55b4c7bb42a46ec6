// tests/synthetic_test.cc

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

#include <cmath>

#include <gtest/gtest.h>

#include "scorenorm/errors.h"
#include "scorenorm/lgsm_scoring.h"
#include "scorenorm/metrics.h"
#include "scorenorm/rng.h"
#include "scorenorm/synthetic.h"
#include "test_util.h"

namespace scorenorm {
namespace {

LgsmParams OneDim(double mu_t, double var_t, double a_t, double b_t,
                  double mu_n, double var_n, double a_n, double b_n) {
  auto v = [](double x) { return Eigen::VectorXd::Constant(1, x); };
  return LgsmParams(ClassParams{mu_t, var_t, v(a_t), v(b_t)},
                    ClassParams{mu_n, var_n, v(a_n), v(b_n)});
}

std::vector<double> ClassCells(const std::vector<LabeledMatrix> &ms, Label l) {
  std::vector<double> out;
  for (const LabeledMatrix &m : ms)
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (m.labels(i, j) == l) out.push_back(m.scores(i, j));
  return out;
}

TEST(Rng, DeterministicStreams) {
  EXPECT_EQ(DeriveSeed(1, 2), DeriveSeed(1, 2));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(1, 3));
  EXPECT_NE(DeriveSeed(1, 2), DeriveSeed(2, 2));
  Rng a(5), b(5);
  for (int k = 0; k < 100; ++k) ASSERT_EQ(a.Normal(), b.Normal());
  Rng u(6);
  for (int k = 0; k < 10000; ++k) {
    const double x = u.Uniform();
    ASSERT_GT(x, 0.0);
    ASSERT_LT(x, 1.0);
  }
}

TEST(Layout, ParseAndLabels) {
  EXPECT_EQ(TargetLayout::Parse("diagonal").LabelAt(2, 2), Label::kTarget);
  EXPECT_EQ(TargetLayout::Parse("diagonal").LabelAt(2, 1), Label::kNontarget);
  TargetLayout b = TargetLayout::Parse("block:3");
  EXPECT_EQ(b.LabelAt(4, 5), Label::kTarget);
  EXPECT_EQ(b.LabelAt(2, 3), Label::kNontarget);
  EXPECT_EQ(b.ToString(), "block:3");
  EXPECT_EQ(TargetLayout::Parse("none").LabelAt(0, 0), Label::kNontarget);
  EXPECT_THROW(TargetLayout::Parse("stripes"), ValidationError);
  EXPECT_THROW(TargetLayout::Parse("block:0"), ValidationError);
}

TEST(SampleMatrix, PlainGaussianMoments) {
  LgsmParams p(0);
  CorpusSpec spec;
  spec.n_matrices = 10;
  spec.rows = spec.cols = 100;
  spec.layout = TargetLayout::Parse("none");
  spec.seed = 1;
  std::vector<double> cells = ClassCells(SampleCorpus(p, spec), Label::kNontarget);
  ASSERT_EQ(cells.size(), 100000u);
  const auto [mean, sd] = testing::MeanStd(cells);
  const double n = double(cells.size());
  EXPECT_LE(std::abs(mean), 3.0 / std::sqrt(n));
  // Standard error of a Gaussian sample variance is sqrt(2 / n).
  EXPECT_LE(std::abs(sd * sd - 1.0), 3.0 * std::sqrt(2.0 / n));
}

TEST(SampleMatrix, TotalVarianceWithLoadings) {
  LgsmParams p = OneDim(3, 0.5, 1.0, 0.5, 0.0, 0.5, 0.8, 0.6);
  CorpusSpec spec;
  spec.n_matrices = 1000;
  spec.rows = spec.cols = 10;
  spec.layout = TargetLayout::Parse("none");
  spec.seed = 2;
  std::vector<double> cells = ClassCells(SampleCorpus(p, spec), Label::kNontarget);
  ASSERT_EQ(cells.size(), 100000u);
  const auto [mean, sd] = testing::MeanStd(cells);
  const double expect = p.nontarget().TotalVariance();
  EXPECT_LE(std::abs(sd * sd - expect), 0.05 * expect);
  EXPECT_LE(std::abs(mean), 0.05);
}

TEST(SampleMatrix, Deterministic) {
  LgsmParams p = OneDim(3, 0.5, 1.0, 0.5, 0.0, 0.5, 0.8, 0.6);
  LabeledMatrix a = SampleMatrix(p, 7, 5, TargetLayout{}, 42);
  LabeledMatrix b = SampleMatrix(p, 7, 5, TargetLayout{}, 42);
  EXPECT_EQ(a.scores, b.scores);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_FALSE(a.scores == SampleMatrix(p, 7, 5, TargetLayout{}, 43).scores);
  EXPECT_EQ(a.labels.Count(Label::kTarget), 5u);
}

TEST(SampleCorpus, IndependentDerivedMatrices) {
  LgsmParams p = OneDim(3, 0.5, 1.0, 0.5, 0.0, 0.5, 0.8, 0.6);
  CorpusSpec spec;
  spec.rows = 8;
  spec.cols = 6;
  spec.seed = 9;
  std::vector<LabeledMatrix> c = SampleCorpus(p, spec);
  ASSERT_EQ(c.size(), 30u);
  for (std::size_t a = 0; a < c.size(); ++a) {
    EXPECT_EQ(c[a].scores,
              SampleMatrix(p, 8, 6, spec.layout, DeriveSeed(9, a)).scores);
    for (std::size_t b = a + 1; b < c.size(); ++b)
      EXPECT_FALSE(c[a].scores == c[b].scores);
  }
  EXPECT_EQ(SampleCorpus(p, spec)[17].scores, c[17].scores);
}

TEST(SampleCorpus, PooledMomentsMatchClassMarginals) {
  LgsmParams p = OneDim(4, 0.25, 1.0, 0.8, 0.0, 1.0, 0.8, 0.6);
  CorpusSpec spec;
  spec.n_matrices = 400;
  spec.rows = spec.cols = 20;
  spec.seed = 3;
  std::vector<LabeledMatrix> c = SampleCorpus(p, spec);
  for (Label l : {Label::kTarget, Label::kNontarget}) {
    const auto [mean, sd] = testing::MeanStd(ClassCells(c, l));
    const ClassParams &cp = p.For(l);
    EXPECT_NEAR(mean, cp.mean, 0.05);
    EXPECT_NEAR(sd * sd, cp.TotalVariance(), 0.05 * cp.TotalVariance());
  }
}

TEST(CorpusSpec, Validate) {
  CorpusSpec spec;
  spec.n_matrices = 0;
  EXPECT_THROW(spec.Validate(), ValidationError);
  spec.n_matrices = 1;
  spec.rows = 0;
  EXPECT_THROW(spec.Validate(), ValidationError);
}

TEST(SampleEvalSet, TrialMomentsMatchClassMarginals) {
  LgsmParams p = OneDim(4, 0.5, 1.2, 0.9, 0.0, 1.0, 0.5, 0.4);
  EvalSet set = SampleEvalSet(p, 3, 4, 20000, 20000, 5);
  ASSERT_EQ(set.trials.size(), 40000u);
  std::vector<double> tar, non, enroll_side;
  for (std::size_t k = 0; k < set.trials.size(); ++k) {
    (set.labels[k] == Hypothesis::kTarget ? tar : non)
        .push_back(set.trials[k].trial_score);
    enroll_side.push_back(set.trials[k].enroll_side[0]);
  }
  EXPECT_EQ(set.labels.front(), Hypothesis::kTarget);
  EXPECT_EQ(set.labels.back(), Hypothesis::kNontarget);
  for (auto [v, cp] : {std::pair{&tar, &p.target()}, std::pair{&non, &p.nontarget()}}) {
    const auto [mean, sd] = testing::MeanStd(*v);
    EXPECT_NEAR(mean, cp->mean, 4 * std::sqrt(cp->TotalVariance() / v->size()));
    EXPECT_NEAR(sd * sd, cp->TotalVariance(), 0.05 * cp->TotalVariance());
  }
  // Enrollment-side scores share y with the fixed test cohort, so across
  // trials only x and the noise vary.
  const auto [me, se] = testing::MeanStd(enroll_side);
  const double expect =
      p.nontarget().variance + p.nontarget().alpha.squaredNorm();
  EXPECT_NEAR(se * se, expect, 0.05 * expect);
  EXPECT_EQ(set.cohort_labels.Count(Label::kNontarget), 4u * 5u);
  TrialContext ctx = set.Context(3);
  EXPECT_EQ(ctx.trial_score, set.trials[3].trial_score);
  EXPECT_EQ(ctx.inter, set.inter);
}

TEST(SampleEvalSet, DeterministicAndValidated) {
  LgsmParams p = OneDim(4, 0.5, 1.2, 0.9, 0.0, 1.0, 0.5, 0.4);
  EvalSet a = SampleEvalSet(p, 3, 3, 5, 5, 1), b = SampleEvalSet(p, 3, 3, 5, 5, 1);
  EXPECT_EQ(a.inter, b.inter);
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(a.trials[k].trial_score, b.trials[k].trial_score);
    EXPECT_EQ(a.trials[k].enroll_side, b.trials[k].enroll_side);
  }
  EXPECT_THROW(SampleEvalSet(p, 1, 3, 5, 5, 1), ValidationError);
}

TEST(SampleEvalSet, NoHiddenVarianceMeansNoGain) {
  LgsmParams p = OneDim(2.0, 1.0, 0.0, 0.0, 0.0, 1.3, 0.0, 0.0);
  EvalSet set = SampleEvalSet(p, 5, 5, 2000, 2000, 8);
  std::vector<double> lgsm = NormalizeBatch(p, set.inter, set.cohort_labels, set.trials);
  LabeledScores raw, norm;
  for (std::size_t k = 0; k < set.trials.size(); ++k) {
    const bool tar = set.labels[k] == Hypothesis::kTarget;
    (tar ? raw.target : raw.nontarget).push_back(set.trials[k].trial_score);
    (tar ? norm.target : norm.nontarget).push_back(lgsm[k]);
  }
  EXPECT_NEAR(Eer(norm), Eer(raw), 0.01);
}

}  // namespace
}  // namespace scorenorm

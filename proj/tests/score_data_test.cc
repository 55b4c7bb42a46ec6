// tests/score_data_test.cc

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
#include <limits>

#include <gtest/gtest.h>

#include "scorenorm/errors.h"
#include "scorenorm/score_data.h"
#include "test_util.h"

namespace scorenorm {
namespace {

TEST(RuntimeGrid, EmptyCohortGivesSingleCell) {
  TrialContext ctx = MakeTrialContext(1.5, {}, {}, ScoreMatrix());
  LabeledMatrix g = AssembleRuntimeGrid(ctx, Hypothesis::kTarget);
  ASSERT_EQ(g.rows(), 1u);
  ASSERT_EQ(g.cols(), 1u);
  EXPECT_EQ(g.scores(0, 0), 1.5);
  EXPECT_EQ(g.labels(0, 0), Label::kTarget);
}

TEST(RuntimeGrid, DirectPlacement) {
  TrialContext ctx =
      MakeTrialContext(1.0, {0.2}, {0.1}, ScoreMatrix::FromRows({{0.5}}));
  LabeledMatrix g = AssembleRuntimeGrid(ctx, Hypothesis::kNontarget);
  EXPECT_EQ(g.scores, ScoreMatrix::FromRows({{0.5, 0.1}, {0.2, 1.0}}));
  EXPECT_EQ(g.labels.Count(Label::kNontarget), 4u);
}

TEST(RuntimeGrid, TrialLabelOnlyTouchesCorner) {
  TrialContext ctx = MakeTrialContext(
      0.0, {1, 2, 3}, {4, 5}, ScoreMatrix::FromRows({{0, 0, 0}, {0, 0, 0}}));
  LabeledMatrix g = AssembleRuntimeGrid(ctx, Hypothesis::kTarget);
  EXPECT_EQ(g.labels(2, 3), Label::kTarget);
  EXPECT_EQ(g.labels.Count(Label::kTarget), 1u);
}

TEST(RuntimeGrid, RoundTripProperty) {
  Rng rng(11);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = testing::UniformInt(&rng, 0, 5);
    const std::size_t m = testing::UniformInt(&rng, 0, 5);
    TrialContext ctx;
    ctx.trial_score = rng.Normal();
    ctx.inter = ScoreMatrix(n, m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) ctx.inter(i, j) = rng.Normal();
    for (std::size_t i = 0; i < n; ++i) ctx.test_side.push_back(rng.Normal());
    for (std::size_t j = 0; j < m; ++j) ctx.enroll_side.push_back(rng.Normal());
    ctx.cohort_labels = LabelMatrix(n + 1, m + 1);
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; j <= m; ++j)
        if (rng.Uniform() < 0.2) ctx.cohort_labels(i, j) = Label::kTarget;
    ctx.cohort_labels(n, m) = Label::kNontarget;

    const Hypothesis h =
        rng.Uniform() < 0.5 ? Hypothesis::kTarget : Hypothesis::kNontarget;
    LabeledMatrix g = AssembleRuntimeGrid(ctx, h);
    EXPECT_EQ(g.labels(n, m), ToLabel(h));
    TrialContext back = DisassembleRuntimeGrid(g);
    EXPECT_EQ(back.trial_score, ctx.trial_score);
    EXPECT_EQ(back.enroll_side, ctx.enroll_side);
    EXPECT_EQ(back.test_side, ctx.test_side);
    EXPECT_EQ(back.inter, ctx.inter);
    EXPECT_EQ(back.cohort_labels, ctx.cohort_labels);
    EXPECT_EQ(AssembleRuntimeGrid(back, h).scores, g.scores);
  }
}

TEST(RuntimeGrid, ShapeMismatch) {
  EXPECT_THROW(MakeTrialContext(0.0, {1, 2}, {1}, ScoreMatrix(1, 3)),
               ShapeError);
  TrialContext ctx = MakeTrialContext(0.0, {1, 2}, {1}, ScoreMatrix(1, 2));
  ctx.test_side.push_back(3.0);
  EXPECT_THROW(AssembleRuntimeGrid(ctx, Hypothesis::kTarget), ShapeError);
  ctx = MakeTrialContext(0.0, {1, 2}, {1}, ScoreMatrix(1, 2));
  ctx.cohort_labels = LabelMatrix(1, 1);
  EXPECT_THROW(AssembleRuntimeGrid(ctx, Hypothesis::kTarget), ShapeError);
}

TEST(LabeledMatrix, Validate) {
  LabeledMatrix m{ScoreMatrix(2, 2, 1.0), LabelMatrix(2, 2)};
  EXPECT_NO_THROW(m.Validate());
  m.scores(0, 1) = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(m.Validate(), ValidationError);
  m.labels(0, 1) = Label::kUnobserved;
  EXPECT_NO_THROW(m.Validate());
  m.labels = LabelMatrix(2, 2, Label::kUnobserved);
  EXPECT_THROW(m.Validate(), ValidationError);
  m.labels = LabelMatrix(2, 3);
  EXPECT_THROW(m.Validate(), ShapeError);
  EXPECT_THROW((LabeledMatrix{ScoreMatrix(), LabelMatrix()}.Validate()),
               ShapeError);
}

TEST(LabelMatrix, Counts) {
  LabelMatrix l(2, 3);
  l(0, 0) = Label::kTarget;
  l(1, 2) = Label::kUnobserved;
  EXPECT_EQ(l.Count(Label::kTarget), 1u);
  EXPECT_EQ(l.Count(Label::kNontarget), 4u);
  EXPECT_EQ(l.CountObserved(), 5u);
  EXPECT_EQ(LabelToken(Label::kUnobserved), "NA");
}

TEST(ScoreMatrix, FromRowsRejectsRagged) {
  EXPECT_THROW(ScoreMatrix::FromRows({{1, 2}, {3}}), ShapeError);
}

TEST(Prior, Range) {
  EXPECT_THROW(Prior(0.0), ValidationError);
  EXPECT_THROW(Prior(1.0), ValidationError);
  EXPECT_THROW(Prior(std::nan("")), ValidationError);
  EXPECT_DOUBLE_EQ(Prior(0.5).Logit(), 0.0);
  EXPECT_NEAR(Prior(0.1).Logit(), std::log(0.1 / 0.9), 1e-15);
}

}  // namespace
}  // namespace scorenorm

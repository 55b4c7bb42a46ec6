// src/score_data.cc

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

#include "scorenorm/score_data.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "scorenorm/errors.h"

namespace scorenorm {

std::string_view LabelToken(Label label) {
  switch (label) {
    case Label::kTarget:
      return "tar";
    case Label::kNontarget:
      return "non";
    case Label::kUnobserved:
      return "NA";
  }
  return "NA";
}

ScoreMatrix::ScoreMatrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

ScoreMatrix ScoreMatrix::FromRows(
    const std::vector<std::vector<double>> &rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ScoreMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols)
      throw ShapeError("ragged rows in ScoreMatrix::FromRows");
    std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
  }
  return m;
}

LabelMatrix::LabelMatrix(std::size_t rows, std::size_t cols, Label fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

std::size_t LabelMatrix::Count(Label label) const {
  return static_cast<std::size_t>(
      std::count(data_.begin(), data_.end(), label));
}

std::size_t LabelMatrix::CountObserved() const {
  return data_.size() - Count(Label::kUnobserved);
}

void LabeledMatrix::Validate() const {
  if (scores.empty())
    throw ShapeError("score matrix must have at least one row and column");
  if (labels.rows() != scores.rows() || labels.cols() != scores.cols())
    throw ShapeError("label matrix is " + std::to_string(labels.rows()) + "x" +
                     std::to_string(labels.cols()) + " but score matrix is " +
                     std::to_string(scores.rows()) + "x" +
                     std::to_string(scores.cols()));
  std::size_t observed = 0;
  for (std::size_t i = 0; i < scores.rows(); ++i) {
    for (std::size_t j = 0; j < scores.cols(); ++j) {
      if (labels(i, j) == Label::kUnobserved) continue;
      ++observed;
      if (!std::isfinite(scores(i, j)))
        throw ValidationError("non-finite observed score at (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ")");
    }
  }
  if (observed == 0) throw ValidationError("no observed cells");
}

void TrialContext::Validate() const {
  const std::size_t n = test_side.size(), m = enroll_side.size();
  if (inter.rows() != n || inter.cols() != m)
    throw ShapeError("inter-cohort matrix is " + std::to_string(inter.rows()) +
                     "x" + std::to_string(inter.cols()) + ", expected " +
                     std::to_string(n) + "x" + std::to_string(m));
  if (cohort_labels.rows() != n + 1 || cohort_labels.cols() != m + 1)
    throw ShapeError("cohort labels must cover the (N+1)x(M+1) grid");
}

TrialContext MakeTrialContext(double trial_score,
                              std::vector<double> enroll_side,
                              std::vector<double> test_side,
                              ScoreMatrix inter) {
  TrialContext ctx;
  ctx.trial_score = trial_score;
  ctx.cohort_labels = LabelMatrix(test_side.size() + 1, enroll_side.size() + 1,
                                  Label::kNontarget);
  ctx.enroll_side = std::move(enroll_side);
  ctx.test_side = std::move(test_side);
  // An N x 0 or 0 x M inter block has no storage, so keep its shape explicit.
  if (inter.rows() == 0 && inter.cols() == 0)
    inter = ScoreMatrix(ctx.test_side.size(), ctx.enroll_side.size());
  ctx.inter = std::move(inter);
  ctx.Validate();
  return ctx;
}

LabeledMatrix AssembleRuntimeGrid(const TrialContext &ctx,
                                  Hypothesis trial_label) {
  ctx.Validate();
  const std::size_t n = ctx.num_enroll_cohort(), m = ctx.num_test_cohort();
  LabeledMatrix grid{ScoreMatrix(n + 1, m + 1), ctx.cohort_labels};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) grid.scores(i, j) = ctx.inter(i, j);
    grid.scores(i, m) = ctx.test_side[i];
  }
  for (std::size_t j = 0; j < m; ++j) grid.scores(n, j) = ctx.enroll_side[j];
  grid.scores(n, m) = ctx.trial_score;
  grid.labels(n, m) = ToLabel(trial_label);
  return grid;
}

TrialContext DisassembleRuntimeGrid(const LabeledMatrix &grid) {
  if (grid.scores.empty())
    throw ShapeError("runtime grid must be at least 1x1");
  if (grid.labels.rows() != grid.rows() || grid.labels.cols() != grid.cols())
    throw ShapeError("label matrix does not match runtime grid");
  const std::size_t n = grid.rows() - 1, m = grid.cols() - 1;
  TrialContext ctx;
  ctx.trial_score = grid.scores(n, m);
  ctx.inter = ScoreMatrix(n, m);
  ctx.test_side.resize(n);
  ctx.enroll_side.resize(m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) ctx.inter(i, j) = grid.scores(i, j);
    ctx.test_side[i] = grid.scores(i, m);
  }
  for (std::size_t j = 0; j < m; ++j) ctx.enroll_side[j] = grid.scores(n, j);
  ctx.cohort_labels = grid.labels;
  ctx.cohort_labels(n, m) = Label::kNontarget;
  return ctx;
}

Prior::Prior(double pi) : pi_(pi) {
  if (!(pi > 0.0 && pi < 1.0))
    throw ValidationError("prior must lie strictly inside (0, 1), got " +
                          std::to_string(pi));
}

double Prior::Logit() const { return std::log(pi_) - std::log1p(-pi_); }

}  // namespace scorenorm

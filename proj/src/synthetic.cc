// src/synthetic.cc

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

#include "scorenorm/synthetic.h"

#include <cmath>

#include "scorenorm/errors.h"
#include "scorenorm/rng.h"

namespace scorenorm {

namespace {

Eigen::VectorXd StandardNormal(Rng &rng, int dim) {
  Eigen::VectorXd v(dim);
  for (int k = 0; k < dim; ++k) v(k) = rng.Normal();
  return v;
}

double SampleScore(Rng &rng, const ClassParams &p, const Eigen::VectorXd &x,
                   const Eigen::VectorXd &y) {
  return p.mean + p.alpha.dot(x) + p.beta.dot(y) +
         std::sqrt(p.variance) * rng.Normal();
}

}  // namespace

Label TargetLayout::LabelAt(std::size_t i, std::size_t j) const {
  switch (kind) {
    case Kind::kDiagonal:
      return i == j ? Label::kTarget : Label::kNontarget;
    case Kind::kBlockDiagonal:
      return i / block == j / block ? Label::kTarget : Label::kNontarget;
    case Kind::kAllNontarget:
      break;
  }
  return Label::kNontarget;
}

TargetLayout TargetLayout::Parse(const std::string &text) {
  if (text == "diagonal") return {};
  if (text == "none") return {Kind::kAllNontarget, 1};
  if (text.rfind("block:", 0) == 0) {
    std::size_t pos = 0;
    long long b = -1;
    try {
      b = std::stoll(text.substr(6), &pos);
    } catch (const std::exception &) {
    }
    if (b >= 1 && pos == text.size() - 6)
      return {Kind::kBlockDiagonal, std::size_t(b)};
  }
  throw ValidationError("unknown target layout '" + text +
                        "' (expected diagonal, block:<b> or none)");
}

std::string TargetLayout::ToString() const {
  switch (kind) {
    case Kind::kDiagonal:
      return "diagonal";
    case Kind::kBlockDiagonal:
      return "block:" + std::to_string(block);
    case Kind::kAllNontarget:
      break;
  }
  return "none";
}

void CorpusSpec::Validate() const {
  if (n_matrices == 0) throw ValidationError("corpus needs n_matrices >= 1");
  if (rows == 0 || cols == 0)
    throw ValidationError("corpus matrices need rows, cols >= 1");
  if (layout.kind == TargetLayout::Kind::kBlockDiagonal && layout.block == 0)
    throw ValidationError("block layout needs a block size >= 1");
}

LabeledMatrix SampleMatrix(const LgsmParams &params, std::size_t rows,
                           std::size_t cols, const TargetLayout &layout,
                           std::uint64_t seed) {
  params.Validate();
  Rng rng(seed);
  std::vector<Eigen::VectorXd> x(rows), y(cols);
  for (auto &v : x) v = StandardNormal(rng, params.dim());
  for (auto &v : y) v = StandardNormal(rng, params.dim());
  LabeledMatrix out{ScoreMatrix(rows, cols), LabelMatrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const Label label = layout.LabelAt(i, j);
      out.labels(i, j) = label;
      out.scores(i, j) = SampleScore(rng, params.For(label), x[i], y[j]);
    }
  }
  return out;
}

std::vector<LabeledMatrix> SampleCorpus(const LgsmParams &params,
                                        const CorpusSpec &spec) {
  spec.Validate();
  std::vector<LabeledMatrix> out;
  out.reserve(spec.n_matrices);
  for (std::size_t m = 0; m < spec.n_matrices; ++m)
    out.push_back(SampleMatrix(params, spec.rows, spec.cols, spec.layout,
                               DeriveSeed(spec.seed, m)));
  return out;
}

TrialContext EvalSet::Context(std::size_t k) const {
  const TrialScores &t = trials.at(k);
  TrialContext ctx = MakeTrialContext(t.trial_score, t.enroll_side,
                                      t.test_side, inter);
  ctx.cohort_labels = cohort_labels;
  return ctx;
}

EvalSet SampleEvalSet(const LgsmParams &params, std::size_t num_enroll_cohort,
                      std::size_t num_test_cohort, std::size_t n_target,
                      std::size_t n_nontarget, std::uint64_t seed) {
  params.Validate();
  if (num_enroll_cohort < 2 || num_test_cohort < 2)
    throw ValidationError("evaluation cohorts need N, M >= 2");
  const std::size_t n = num_enroll_cohort, m = num_test_cohort;
  const int d = params.dim();
  const ClassParams &non = params.nontarget();

  Rng cohort_rng(DeriveSeed(seed, 0));
  std::vector<Eigen::VectorXd> x(n), y(m);
  for (auto &v : x) v = StandardNormal(cohort_rng, d);
  for (auto &v : y) v = StandardNormal(cohort_rng, d);

  EvalSet set;
  set.inter = ScoreMatrix(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      set.inter(i, j) = SampleScore(cohort_rng, non, x[i], y[j]);
  set.cohort_labels = LabelMatrix(n + 1, m + 1, Label::kNontarget);

  const std::size_t total = n_target + n_nontarget;
  set.trials.reserve(total);
  set.labels.reserve(total);
  for (std::size_t k = 0; k < total; ++k) {
    const Hypothesis h =
        k < n_target ? Hypothesis::kTarget : Hypothesis::kNontarget;
    Rng rng(DeriveSeed(seed, k + 1));
    const Eigen::VectorXd xt = StandardNormal(rng, d);
    const Eigen::VectorXd yt = StandardNormal(rng, d);
    TrialScores t;
    t.enroll_side.resize(m);
    t.test_side.resize(n);
    for (std::size_t j = 0; j < m; ++j)
      t.enroll_side[j] = SampleScore(rng, non, xt, y[j]);
    for (std::size_t i = 0; i < n; ++i)
      t.test_side[i] = SampleScore(rng, non, x[i], yt);
    t.trial_score = SampleScore(rng, params.For(h), xt, yt);
    set.trials.push_back(std::move(t));
    set.labels.push_back(h);
  }
  return set;
}

}  // namespace scorenorm

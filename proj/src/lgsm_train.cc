// src/lgsm_train.cc

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

#include "scorenorm/lgsm_train.h"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "scorenorm/errors.h"
#include "scorenorm/rng.h"

namespace scorenorm {

namespace {

ClassStats EmptyClassStats(int dim) {
  const Eigen::Index n = 1 + 2 * dim;
  return ClassStats{Eigen::MatrixXd::Zero(n, n), Eigen::VectorXd::Zero(n), 0.0,
                    0.0};
}

Eigen::VectorXd Theta(const ClassParams &p) {
  const Eigen::Index d = p.alpha.size();
  Eigen::VectorXd theta(1 + 2 * d);
  theta << p.mean, p.alpha, p.beta;
  return theta;
}

double ClassExpectedLogLik(const ClassStats &s, const ClassParams &p) {
  if (s.count == 0.0) return 0.0;
  const Eigen::VectorXd theta = Theta(p);
  const double sq = s.ss - 2.0 * theta.dot(s.sw) + theta.dot(s.ww * theta);
  return -0.5 * (sq / p.variance +
                 s.count * std::log(2.0 * std::numbers::pi * p.variance));
}

ClassParams SolveClass(const ClassStats &s, int dim, const char *name) {
  if (s.count == 0.0)
    throw TrainingError(std::string("no observed ") + name + " cells");
  Eigen::LLT<Eigen::MatrixXd> llt(s.ww);
  if (llt.info() != Eigen::Success && dim > 0) {
    // Ridge on the loading block only; the intercept row is always
    // well-posed once count > 0.
    Eigen::MatrixXd ww = s.ww;
    const double ridge =
        1e-8 * std::max(1.0, ww.diagonal().tail(2 * dim).cwiseAbs().maxCoeff());
    ww.diagonal().tail(2 * dim).array() += ridge;
    llt.compute(ww);
  }
  if (llt.info() != Eigen::Success)
    throw NumericalError(std::string("singular M-step system for ") + name);
  const Eigen::VectorXd theta = llt.solve(s.sw);
  ClassParams p;
  p.mean = theta(0);
  p.alpha = theta.segment(1, dim);
  p.beta = theta.segment(1 + dim, dim);
  // At the solution ss - 2 theta'sw + theta'ww theta = ss - theta'sw; the long
  // form is kept since a ridge makes them differ.
  const double sq = s.ss - 2.0 * theta.dot(s.sw) + theta.dot(s.ww * theta);
  p.variance = std::max(sq / s.count, kVarianceFloor);
  return p;
}

bool SymmetricSqrt(const Eigen::MatrixXd &m, Eigen::MatrixXd *root) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
  if (eig.info() != Eigen::Success) return false;
  const Eigen::VectorXd values = eig.eigenvalues();
  if (!(values.minCoeff() > 0.0)) return false;
  *root = eig.eigenvectors() * values.cwiseSqrt().asDiagonal() *
          eig.eigenvectors().transpose();
  return true;
}

void CheckClasses(std::span<const LabeledMatrix> matrices) {
  if (matrices.empty()) throw TrainingError("no training matrices");
  std::size_t tar = 0, non = 0;
  for (const LabeledMatrix &m : matrices) {
    m.Validate();
    tar += m.labels.Count(Label::kTarget);
    non += m.labels.Count(Label::kNontarget);
  }
  if (tar == 0) throw TrainingError("training data has no target cells");
  if (non == 0) throw TrainingError("training data has no nontarget cells");
}

}  // namespace

SufficientStats::SufficientStats(int dim)
    : dim(dim),
      target(EmptyClassStats(dim)),
      nontarget(EmptyClassStats(dim)),
      x_second_sum(Eigen::MatrixXd::Zero(dim, dim)),
      y_second_sum(Eigen::MatrixXd::Zero(dim, dim)) {}

void SufficientStats::Accumulate(const PosteriorMoments &moments,
                                 const LabeledMatrix &grid) {
  if (moments.dim != dim || moments.rows != grid.rows() ||
      moments.cols != grid.cols())
    throw ShapeError("posterior moments do not match the score matrix");
  const Eigen::Index d = dim;
  Eigen::VectorXd w(1 + 2 * d);
  Eigen::MatrixXd ww(1 + 2 * d, 1 + 2 * d);
  for (std::size_t i = 0; i < grid.rows(); ++i) {
    for (std::size_t j = 0; j < grid.cols(); ++j) {
      const Label label = grid.labels(i, j);
      if (label == Label::kUnobserved) continue;
      ClassStats &cs = label == Label::kTarget ? target : nontarget;
      const double s = grid.scores(i, j);
      const Eigen::VectorXd &mx = moments.x_mean[i], &my = moments.y_mean[j];
      w << 1.0, mx, my;
      ww(0, 0) = 1.0;
      ww.block(0, 1, 1, d) = mx.transpose();
      ww.block(0, 1 + d, 1, d) = my.transpose();
      ww.block(1, 0, d, 1) = mx;
      ww.block(1 + d, 0, d, 1) = my;
      ww.block(1, 1, d, d) = moments.x_second[i];
      ww.block(1 + d, 1 + d, d, d) = moments.y_second[j];
      ww.block(1, 1 + d, d, d) = moments.Cross(i, j);
      ww.block(1 + d, 1, d, d) = moments.Cross(i, j).transpose();
      cs.ww += ww;
      cs.sw += s * w;
      cs.ss += s * s;
      cs.count += 1.0;
    }
  }
  for (const Eigen::MatrixXd &m : moments.x_second) x_second_sum += m;
  for (const Eigen::MatrixXd &m : moments.y_second) y_second_sum += m;
  x_count += moments.rows;
  y_count += moments.cols;
  log_marginal += moments.log_marginal;
}

SufficientStats CollectStats(const LgsmParams &params,
                             std::span<const LabeledMatrix> matrices) {
  SufficientStats stats(params.dim());
  for (const LabeledMatrix &m : matrices)
    stats.Accumulate(EStep(params, m), m);
  return stats;
}

double ExpectedDataLogLik(const SufficientStats &stats,
                          const LgsmParams &params) {
  return ClassExpectedLogLik(stats.target, params.target()) +
         ClassExpectedLogLik(stats.nontarget, params.nontarget());
}

LgsmParams MStep(const SufficientStats &stats) {
  return LgsmParams(SolveClass(stats.target, stats.dim, "target"),
                    SolveClass(stats.nontarget, stats.dim, "nontarget"));
}

LgsmParams MinDivStep(const LgsmParams &params, const SufficientStats &stats,
                      std::vector<std::string> *warnings) {
  if (params.dim() == 0) return params;
  if (stats.dim != params.dim())
    throw ShapeError("statistics and parameters disagree on dimension");
  LgsmParams out = params;
  Eigen::MatrixXd root;
  if (stats.x_count > 0 &&
      SymmetricSqrt(stats.x_second_sum / double(stats.x_count), &root)) {
    out.target().alpha = root * params.target().alpha;
    out.nontarget().alpha = root * params.nontarget().alpha;
  } else if (warnings) {
    warnings->push_back("min-div: row moment not positive definite, skipped");
  }
  if (stats.y_count > 0 &&
      SymmetricSqrt(stats.y_second_sum / double(stats.y_count), &root)) {
    out.target().beta = root * params.target().beta;
    out.nontarget().beta = root * params.nontarget().beta;
  } else if (warnings) {
    warnings->push_back(
        "min-div: column moment not positive definite, skipped");
  }
  return out;
}

LgsmParams InitParams(std::span<const LabeledMatrix> matrices, int dim,
                      std::uint64_t seed) {
  CheckClasses(matrices);
  double sum[2] = {0, 0}, sum_sq[2] = {0, 0}, n[2] = {0, 0};
  for (const LabeledMatrix &m : matrices) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const Label label = m.labels(i, j);
        if (label == Label::kUnobserved) continue;
        const int c = label == Label::kTarget ? 0 : 1;
        const double s = m.scores(i, j);
        sum[c] += s;
        sum_sq[c] += s * s;
        n[c] += 1.0;
      }
    }
  }
  Rng rng(DeriveSeed(seed, 0));
  ClassParams cls[2];
  for (int c = 0; c < 2; ++c) {
    cls[c].mean = sum[c] / n[c];
    cls[c].variance =
        std::max(sum_sq[c] / n[c] - cls[c].mean * cls[c].mean, kVarianceFloor);
    const double scale = 0.1 * std::sqrt(cls[c].variance);
    cls[c].alpha.resize(dim);
    cls[c].beta.resize(dim);
    for (int k = 0; k < dim; ++k) cls[c].alpha(k) = rng.Normal(0.0, scale);
    for (int k = 0; k < dim; ++k) cls[c].beta(k) = rng.Normal(0.0, scale);
  }
  return LgsmParams(cls[0], cls[1]);
}

EmResult EmFit(std::span<const LabeledMatrix> matrices, int dim,
               const EmConfig &config) {
  if (dim < 0) throw ValidationError("hidden dimension must be >= 0");
  return EmFit(matrices, InitParams(matrices, dim, config.seed), config);
}

EmResult EmFit(std::span<const LabeledMatrix> matrices,
               const LgsmParams &init, const EmConfig &config) {
  CheckClasses(matrices);
  if (config.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  if (!(config.tol >= 0.0)) throw ValidationError("tol must be >= 0");

  EmResult result{init, {}};
  TrainTrace &trace = result.trace;
  SufficientStats stats = CollectStats(result.params, matrices);
  trace.log_likelihood.push_back(stats.log_marginal);
  for (int it = 1; it <= config.max_iters; ++it) {
    LgsmParams next = MStep(stats);
    if (config.min_div) next = MinDivStep(next, stats, &trace.warnings);
    result.params = std::move(next);
    stats = CollectStats(result.params, matrices);
    const double prev = trace.log_likelihood.back();
    const double cur = stats.log_marginal;
    if (!std::isfinite(cur))
      throw NumericalError("training objective became non-finite at "
                           "iteration " + std::to_string(it));
    trace.log_likelihood.push_back(cur);
    trace.iterations = it;
    if ((cur - prev) <= config.tol * std::abs(prev)) {
      trace.converged = true;
      break;
    }
  }
  if (!trace.converged)
    trace.warnings.push_back("did not converge in " +
                             std::to_string(config.max_iters) + " iterations");
  return result;
}

}  // namespace scorenorm

// src/lgsm_posterior.cc

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

#include "scorenorm/lgsm_posterior.h"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>

#include "lgsm_internal.h"
#include "scorenorm/errors.h"

namespace scorenorm {

namespace {

constexpr double kJitter = 1e-10;

std::atomic<std::uint64_t> g_factorizations{0};

void CheckShapes(const LgsmParams &params, const LabeledMatrix &grid) {
  params.Validate();
  grid.Validate();
}

}  // namespace

namespace internal {

Eigen::MatrixXd BuildPrecision(const LgsmParams &params,
                               const LabelMatrix &labels) {
  const Eigen::Index d = params.dim();
  const std::size_t k = labels.rows(), l = labels.cols();
  const Eigen::Index n = d * Eigen::Index(k + l);
  Eigen::MatrixXd precision = Eigen::MatrixXd::Identity(n, n);
  if (d == 0) return precision;

  // Per-class outer products, computed once.
  struct Outer {
    Eigen::MatrixXd aa, bb, ab;
  };
  auto outer = [](const ClassParams &p) {
    const double w = 1.0 / p.variance;
    const Eigen::MatrixXd aa = w * p.alpha * p.alpha.transpose();
    const Eigen::MatrixXd bb = w * p.beta * p.beta.transpose();
    // Exactly symmetric, so the full precision is too.
    return Outer{0.5 * (aa + aa.transpose()), 0.5 * (bb + bb.transpose()),
                 w * p.alpha * p.beta.transpose()};
  };
  const Outer tar = outer(params.target()), non = outer(params.nontarget());

  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::Index xi = Eigen::Index(i) * d;
    for (std::size_t j = 0; j < l; ++j) {
      const Label label = labels(i, j);
      if (label == Label::kUnobserved) continue;
      const Outer &o = label == Label::kTarget ? tar : non;
      const Eigen::Index yj = Eigen::Index(k + j) * d;
      precision.block(xi, xi, d, d) += o.aa;
      precision.block(yj, yj, d, d) += o.bb;
      precision.block(xi, yj, d, d) += o.ab;
      precision.block(yj, xi, d, d) += o.ab.transpose();
    }
  }
  return precision;
}

Eigen::LLT<Eigen::MatrixXd> FactorPrecision(const Eigen::MatrixXd &precision) {
  ++g_factorizations;
  Eigen::LLT<Eigen::MatrixXd> llt(precision);
  if (llt.info() == Eigen::Success) return llt;
  const Eigen::Index n = precision.rows();
  llt.compute(precision + kJitter * Eigen::MatrixXd::Identity(n, n));
  if (llt.info() != Eigen::Success)
    throw NumericalError(
        "posterior precision is not positive definite (invalid variances?)");
  return llt;
}

double LogDetFromCholesky(const Eigen::LLT<Eigen::MatrixXd> &llt) {
  const Eigen::MatrixXd &factor = llt.matrixLLT();
  double log_det = 0.0;
  for (Eigen::Index i = 0; i < factor.rows(); ++i)
    log_det += std::log(factor(i, i));
  return 2.0 * log_det;
}

void AccumulateGamma(const LgsmParams &params, const LabeledMatrix &grid,
                     Eigen::VectorXd *gamma, double *data_term) {
  const Eigen::Index d = params.dim();
  const std::size_t k = grid.rows(), l = grid.cols();
  gamma->setZero(d * Eigen::Index(k + l));
  const double log_2pi = std::log(2.0 * std::numbers::pi);
  const double log_norm_tar = log_2pi + std::log(params.target().variance);
  const double log_norm_non = log_2pi + std::log(params.nontarget().variance);
  double total = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const Label label = grid.labels(i, j);
      if (label == Label::kUnobserved) continue;
      const ClassParams &p = params.For(label);
      const double residual = grid.scores(i, j) - p.mean;
      const double w = residual / p.variance;
      total += residual * w +
               (label == Label::kTarget ? log_norm_tar : log_norm_non);
      if (d > 0) {
        gamma->segment(Eigen::Index(i) * d, d) += w * p.alpha;
        gamma->segment(Eigen::Index(k + j) * d, d) += w * p.beta;
      }
    }
  }
  *data_term = -0.5 * total;
}

}  // namespace internal

PosteriorSummary BuildPosterior(const LgsmParams &params,
                                const LabeledMatrix &grid) {
  CheckShapes(params, grid);
  PosteriorSummary post;
  post.rows = grid.rows();
  post.cols = grid.cols();
  post.dim = params.dim();
  post.precision = internal::BuildPrecision(params, grid.labels);
  post.cholesky = internal::FactorPrecision(post.precision);
  post.log_det_precision = internal::LogDetFromCholesky(post.cholesky);
  internal::AccumulateGamma(params, grid, &post.gamma, &post.data_term);
  post.mean = post.cholesky.solve(post.gamma);
  post.log_marginal = post.data_term + 0.5 * post.gamma.dot(post.mean) -
                      0.5 * post.log_det_precision;
  if (!std::isfinite(post.log_marginal))
    throw NumericalError("non-finite marginal log-likelihood");
  return post;
}

double LogMarginal(const LgsmParams &params, const LabeledMatrix &grid) {
  return BuildPosterior(params, grid).log_marginal;
}

PosteriorMoments ComputeMoments(const PosteriorSummary &post) {
  const Eigen::Index d = post.dim;
  const std::size_t k = post.rows, l = post.cols;
  const Eigen::Index n = post.precision.rows();
  const Eigen::MatrixXd covariance =
      post.cholesky.solve(Eigen::MatrixXd::Identity(n, n));

  PosteriorMoments m;
  m.rows = k;
  m.cols = l;
  m.dim = post.dim;
  m.log_marginal = post.log_marginal;
  m.x_mean.reserve(k);
  m.x_second.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Eigen::Index xi = post.XOffset(i);
    Eigen::VectorXd mu = post.mean.segment(xi, d);
    m.x_second.push_back(covariance.block(xi, xi, d, d) + mu * mu.transpose());
    m.x_mean.push_back(std::move(mu));
  }
  m.y_mean.reserve(l);
  m.y_second.reserve(l);
  for (std::size_t j = 0; j < l; ++j) {
    const Eigen::Index yj = post.YOffset(j);
    Eigen::VectorXd mu = post.mean.segment(yj, d);
    m.y_second.push_back(covariance.block(yj, yj, d, d) + mu * mu.transpose());
    m.y_mean.push_back(std::move(mu));
  }
  m.cross_second.reserve(k * l);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      m.cross_second.push_back(
          covariance.block(post.XOffset(i), post.YOffset(j), d, d) +
          m.x_mean[i] * m.y_mean[j].transpose());
    }
  }
  return m;
}

PosteriorMoments EStep(const LgsmParams &params, const LabeledMatrix &grid) {
  return ComputeMoments(BuildPosterior(params, grid));
}

std::uint64_t PrecisionFactorizationCount() { return g_factorizations.load(); }

}  // namespace scorenorm

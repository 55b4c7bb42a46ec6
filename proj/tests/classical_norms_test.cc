// tests/classical_norms_test.cc

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
#include <string>

#include <gtest/gtest.h>

#include "scorenorm/classical_norms.h"
#include "scorenorm/errors.h"
#include "test_util.h"

namespace scorenorm {
namespace {

std::vector<double> RandomCohort(Rng *rng, std::size_t n) {
  std::vector<double> v;
  const double loc = rng->Normal(0, 3), scale = 0.1 + 3 * rng->Uniform();
  for (std::size_t k = 0; k < n; ++k) v.push_back(rng->Normal(loc, scale));
  return v;
}

TEST(TNorm, WorkedExamples) {
  const std::vector<double> c{1, 2, 3};
  EXPECT_NEAR(TNorm(3.0, c), 1.0, 1e-12);
  EXPECT_NEAR(TNorm(2.0, c), 0.0, 1e-12);
  const std::vector<double> c2{2 * 1 + 5, 2 * 2 + 5, 2 * 3 + 5};
  EXPECT_NEAR(TNorm(2 * 3.0 + 5, c2), 1.0, 1e-12);
}

TEST(ZNorm, WorkedExamples) {
  const std::vector<double> c{0, 2};
  EXPECT_NEAR(ZNorm(2.0, c), 0.70711, 5e-6);
  EXPECT_NEAR(ZNorm(1.0, c), 0.0, 1e-12);
  EXPECT_THROW(ZNorm(1.0, std::vector<double>{1, 1}), DegenerateCohortError);
  EXPECT_THROW(ZNorm(1.0, std::vector<double>{1}), DegenerateCohortError);
  EXPECT_THROW(TNorm(1.0, std::vector<double>{}), DegenerateCohortError);
}

TEST(CohortStats, SampleStd) {
  CohortStats s = ComputeCohortStats(std::vector<double>{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_NEAR(s.std, std::sqrt(5.0 / 3.0), 1e-15);
  EXPECT_THROW(ComputeCohortStats(std::vector<double>{3, 3 + 1e-14}),
               DegenerateCohortError);
}

TEST(TNorm, AffineAndNegationProperty) {
  Rng rng(21);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<double> c = RandomCohort(&rng, testing::UniformInt(&rng, 2, 30));
    const double s = rng.Normal(0, 3);
    const double a = std::exp(rng.Normal(0, 1.5)), b = rng.Normal(0, 10);
    std::vector<double> ca, cn;
    for (double v : c) {
      ca.push_back(a * v + b);
      cn.push_back(-v);
    }
    const double t = TNorm(s, c);
    EXPECT_NEAR(TNorm(a * s + b, ca), t, 1e-9 * (1 + std::abs(t)));
    EXPECT_NEAR(TNorm(-s, cn), -t, 1e-12 * (1 + std::abs(t)));
    EXPECT_NEAR(ZNorm(a * s + b, ca), ZNorm(s, c), 1e-9 * (1 + std::abs(t)));
    EXPECT_NEAR(ZNorm(-s, cn), -ZNorm(s, c), 1e-12 * (1 + std::abs(t)));
  }
}

TEST(ZtNorm, WorkedExample) {
  TrialContext ctx = MakeTrialContext(2.0, {0, 2}, {3, 0},
                                      ScoreMatrix::FromRows({{0, 2}, {-2, 0}}));
  EXPECT_NEAR(ZTNorm(ctx), -0.70711, 5e-6);
  EXPECT_NEAR(ZTNorm(ctx),
              testing::StraightZtNorm(2.0, {0, 2}, {3, 0}, {{0, 2}, {-2, 0}}),
              1e-14);
}

TEST(ZtNorm, MatchesStraightLineProperty) {
  Rng rng(22);
  for (int rep = 0; rep < 300; ++rep) {
    const std::size_t n = testing::UniformInt(&rng, 2, 8);
    const std::size_t m = testing::UniformInt(&rng, 2, 8);
    std::vector<double> e = RandomCohort(&rng, m), t = RandomCohort(&rng, n);
    std::vector<std::vector<double>> inter;
    ScoreMatrix im(n, m);
    for (std::size_t i = 0; i < n; ++i) {
      inter.push_back(RandomCohort(&rng, m));
      for (std::size_t j = 0; j < m; ++j) im(i, j) = inter[i][j];
    }
    const double s = rng.Normal(0, 3);
    TrialContext ctx = MakeTrialContext(s, e, t, im);
    const double ref = testing::StraightZtNorm(s, e, t, inter);
    EXPECT_NEAR(ZTNorm(ctx), ref, 1e-10 * (1 + std::abs(ref)));
  }
}

TEST(ZtNorm, IdentityZStepReducesToTNorm) {
  // Each length-2 cohort {-1/sqrt2, 1/sqrt2} has mean 0 and sample std 1.
  const double h = 1.0 / std::sqrt(2.0);
  const std::vector<double> unit{-h, h};
  const std::vector<double> t{0.3, -1.2, 2.5};
  TrialContext ctx = MakeTrialContext(
      1.7, unit, t, ScoreMatrix::FromRows({{-h, h}, {h, -h}, {-h, h}}));
  EXPECT_NEAR(ZTNorm(ctx), TNorm(1.7, t), 1e-12);
}

TEST(ZtNorm, DegenerateStepsNamed) {
  TrialContext one =
      MakeTrialContext(1.0, {0, 2}, {3}, ScoreMatrix::FromRows({{0, 2}}));
  try {
    ZTNorm(one);
    FAIL();
  } catch (const DegenerateCohortError &e) {
    EXPECT_NE(std::string(e.what()).find("T step"), std::string::npos);
  }
  TrialContext flat = MakeTrialContext(1.0, {0, 2}, {3, 1},
                                       ScoreMatrix::FromRows({{0, 2}, {1, 1}}));
  try {
    ZTNorm(flat);
    FAIL();
  } catch (const DegenerateCohortError &e) {
    EXPECT_NE(std::string(e.what()).find("Z step"), std::string::npos);
  }
  // Z-normalized test side collapses to a constant.
  TrialContext same = MakeTrialContext(
      1.0, {0, 2}, {2, 2}, ScoreMatrix::FromRows({{0, 2}, {0, 2}}));
  EXPECT_THROW(ZTNorm(same), DegenerateCohortError);
}

TEST(SNorm, WorkedExamples) {
  const std::vector<double> e{0, 2}, t{1, 3};
  EXPECT_NEAR(SNorm(2.0, e, t), 0.35355, 5e-6);
  EXPECT_DOUBLE_EQ(SNorm(2.0, t, e), SNorm(2.0, e, t));
  const std::vector<double> a{1, 3}, b{0, 4};
  EXPECT_NEAR(SNorm(2.0, a, b), 0.0, 1e-15);
  EXPECT_THROW(SNorm(2.0, e, std::vector<double>{1, 1}), DegenerateCohortError);
}

TEST(SNorm, SymmetryProperty) {
  Rng rng(23);
  for (int rep = 0; rep < 500; ++rep) {
    std::vector<double> a = RandomCohort(&rng, testing::UniformInt(&rng, 2, 20));
    std::vector<double> b = RandomCohort(&rng, testing::UniformInt(&rng, 2, 20));
    const double s = rng.Normal(0, 3);
    EXPECT_DOUBLE_EQ(SNorm(s, a, b), SNorm(s, b, a));
    EXPECT_NEAR(SNorm(s, a, b), 0.5 * (TNorm(s, a) + TNorm(s, b)), 1e-12);
  }
}

}  // namespace
}  // namespace scorenorm

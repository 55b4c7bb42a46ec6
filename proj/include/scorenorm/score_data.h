// include/scorenorm/score_data.h

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

#ifndef SCORENORM_SCORE_DATA_H_
#define SCORENORM_SCORE_DATA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace scorenorm {

/// Hypothesis label of one score cell.
enum class Label : std::uint8_t { kTarget, kNontarget, kUnobserved };

/// Hypothesis of the trial-at-hand; never unobserved.
enum class Hypothesis : std::uint8_t { kTarget, kNontarget };

inline Label ToLabel(Hypothesis h) {
  return h == Hypothesis::kTarget ? Label::kTarget : Label::kNontarget;
}

std::string_view LabelToken(Label label);

/// Dense row-major grid of raw scores. Rows are the enrollment side, columns
/// the test side.
class ScoreMatrix {
 public:
  ScoreMatrix() = default;
  ScoreMatrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Builds from nested rows; all rows must have equal length.
  static ScoreMatrix FromRows(const std::vector<std::vector<double>> &rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  double &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const { return data_; }

  bool operator==(const ScoreMatrix &other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> data_;
};

/// Per-cell labels, same layout as ScoreMatrix.
class LabelMatrix {
 public:
  LabelMatrix() = default;
  LabelMatrix(std::size_t rows, std::size_t cols,
              Label fill = Label::kNontarget);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Label operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  Label &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }

  std::size_t Count(Label label) const;
  std::size_t CountObserved() const;

  bool operator==(const LabelMatrix &other) const = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Label> data_;
};

/// A score matrix together with its hypothesis labels.
struct LabeledMatrix {
  ScoreMatrix scores;
  LabelMatrix labels;

  std::size_t rows() const { return scores.rows(); }
  std::size_t cols() const { return scores.cols(); }

  /// Throws ShapeError on mismatched or empty shapes and ValidationError on a
  /// non-finite observed score or a grid with no observed cell.
  void Validate() const;
};

/// The trial-at-hand with its three cohort score sets. With N enrollment
/// cohort items and M test cohort items:
///   enroll_side: the trial enrollment scored against the test cohort (M),
///   test_side: the enrollment cohort scored against the trial test item (N),
///   inter: enrollment cohort vs test cohort (N x M).
/// cohort_labels covers the whole (N+1) x (M+1) runtime grid; its trial cell
/// (N, M) is ignored.
struct TrialContext {
  double trial_score = 0.0;
  std::vector<double> enroll_side;
  std::vector<double> test_side;
  ScoreMatrix inter;
  LabelMatrix cohort_labels;

  std::size_t num_enroll_cohort() const { return test_side.size(); }
  std::size_t num_test_cohort() const { return enroll_side.size(); }

  /// Throws ShapeError when the pieces disagree in size.
  void Validate() const;
};

/// Creates a context with every cohort label nontarget (disjoint cohorts).
TrialContext MakeTrialContext(double trial_score,
                              std::vector<double> enroll_side,
                              std::vector<double> test_side, ScoreMatrix inter);

/// Places the context into the (N+1) x (M+1) runtime grid: the inter-cohort
/// block top-left, test_side as the last column, enroll_side as the last row
/// and the trial score in the bottom-right corner, labeled trial_label.
LabeledMatrix AssembleRuntimeGrid(const TrialContext &ctx,
                                  Hypothesis trial_label);

/// Inverse of AssembleRuntimeGrid. The trial cell label is discarded.
TrialContext DisassembleRuntimeGrid(const LabeledMatrix &grid);

/// Target prior probability, strictly inside (0, 1).
class Prior {
 public:
  explicit Prior(double pi);
  double pi() const { return pi_; }
  double Logit() const;

 private:
  double pi_;
};

}  // namespace scorenorm

#endif  // SCORENORM_SCORE_DATA_H_

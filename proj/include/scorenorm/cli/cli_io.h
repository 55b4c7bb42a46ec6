// include/scorenorm/cli/cli_io.h

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

#ifndef SCORENORM_CLI_CLI_IO_H_
#define SCORENORM_CLI_CLI_IO_H_

#include <optional>
#include <string>
#include <vector>

#include "scorenorm/score_data.h"

namespace scorenorm {
namespace cli {

// Trial list, tab separated:
//   #scorenorm-trials v1
//   <trial-id> <score> <enroll-id> <test-id> [tar|non]
// enroll-id names a row of the cohort's enrollment-side matrix, test-id a
// column of its test-side matrix.
struct TrialRecord {
  std::string id;
  double score = 0.0;
  std::string enroll_id;
  std::string test_id;
  std::optional<Hypothesis> label;
};

std::vector<TrialRecord> ReadTrials(const std::string &path);
void WriteTrials(const std::vector<TrialRecord> &trials,
                 const std::string &path);

// Cohort manifest (JSON):
//   {"format": "scorenorm-cohort", "version": 1,
//    "inter": "<N x M matrix>",
//    "enroll": {"scores": "<E x M matrix>", "ids": [E ids]},
//    "test":   {"scores": "<N x T matrix>", "ids": [T ids]}}
// Paths are relative to the manifest. Row r of the enrollment matrix holds
// enrollment r scored against the test cohort, column c of the test matrix
// the enrollment cohort scored against test item c; their labels become the
// last row and column of each trial's runtime grid.
struct Cohort {
  LabeledMatrix inter;
  LabeledMatrix enroll;
  std::vector<std::string> enroll_ids;
  LabeledMatrix test;
  std::vector<std::string> test_ids;

  std::size_t EnrollIndex(const std::string &id) const;
  std::size_t TestIndex(const std::string &id) const;
  /// Runtime context for a trial. Throws ValidationError on unknown ids.
  TrialContext Context(const TrialRecord &trial) const;
};

Cohort ReadCohort(const std::string &manifest_path);
/// Writes the three matrices next to the manifest as <stem>_inter.tsv,
/// <stem>_enroll.tsv and <stem>_test.tsv.
void WriteCohort(const Cohort &cohort, const std::string &manifest_path);

// Normalized score list, tab separated:
//   #scorenorm-scores v1 method=<name>
//   <trial-id> <score> <tar|non|-> [<posterior>]   (success)
//   <trial-id> NA <tar|non|-> <message>            (per-trial failure)
// The posterior column is present when a target prior was given.
struct ScoreRecord {
  std::string id;
  std::optional<double> score;
  std::optional<Hypothesis> label;
  std::optional<double> posterior;
  std::string error;
};

std::vector<ScoreRecord> ReadScores(const std::string &path);
void WriteScores(const std::vector<ScoreRecord> &scores,
                 const std::string &method, const std::string &path);

/// Path of `relative` resolved against the directory holding `anchor`.
std::string ResolvePath(const std::string &anchor, const std::string &relative);

}  // namespace cli
}  // namespace scorenorm

#endif  // SCORENORM_CLI_CLI_IO_H_

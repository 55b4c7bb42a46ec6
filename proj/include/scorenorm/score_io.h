// include/scorenorm/score_io.h

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

#ifndef SCORENORM_SCORE_IO_H_
#define SCORENORM_SCORE_IO_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "scorenorm/score_data.h"

namespace scorenorm {

// Score-matrix text format (UTF-8, tab separated):
//
//   #scorenorm-matrix v1 rows=<K> cols=<L>
//   =<score>:<label>\t=<score>:<label>...     (K lines of L cells)
//
// with label one of tar, non, NA. The score field of an NA cell is ignored on
// read and such cells come back as NaN. Scores are written with 17
// significant digits so every finite double round-trips exactly.

/// Shortest-safe decimal form of a double (17 significant digits).
std::string FormatScore(double value);

/// Parses a full token as a double; returns false on any trailing garbage.
bool ParseDouble(std::string_view token, double *value);

LabeledMatrix ReadScoreMatrix(std::istream &is);
LabeledMatrix ReadScoreMatrix(const std::string &path);

void WriteScoreMatrix(const LabeledMatrix &matrix, std::ostream &os);
void WriteScoreMatrix(const LabeledMatrix &matrix, const std::string &path);

}  // namespace scorenorm

#endif  // SCORENORM_SCORE_IO_H_

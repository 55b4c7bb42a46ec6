// src/score_io.cc

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

#include "scorenorm/score_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "scorenorm/errors.h"

namespace scorenorm {

namespace {

constexpr std::string_view kMagic = "#scorenorm-matrix";

bool ParseSize(std::string_view token, std::string_view key,
               std::size_t *value) {
  if (token.substr(0, key.size()) != key) return false;
  token.remove_prefix(key.size());
  const char *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

void ParseHeader(const std::string &line, std::size_t *rows,
                 std::size_t *cols) {
  std::istringstream ss(line);
  std::string magic, version, rows_tok, cols_tok, extra;
  ss >> magic >> version >> rows_tok >> cols_tok;
  if (magic != kMagic || version != "v1" ||
      !ParseSize(rows_tok, "rows=", rows) ||
      !ParseSize(cols_tok, "cols=", cols) || (ss >> extra))
    throw ParseError("malformed header, expected '#scorenorm-matrix v1 "
                     "rows=<K> cols=<L>'", 1);
  if (*rows == 0 || *cols == 0)
    throw ParseError("header declares an empty matrix", 1);
}

Label ParseLabel(std::string_view token, int line) {
  if (token == "tar") return Label::kTarget;
  if (token == "non") return Label::kNontarget;
  if (token == "NA") return Label::kUnobserved;
  throw ParseError("unknown label token '" + std::string(token) + "'", line);
}

}  // namespace

std::string FormatScore(double value) {
  char buf[32];
  int n = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, n);
}

bool ParseDouble(std::string_view token, double *value) {
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  const char *end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, *value);
  return ec == std::errc() && ptr == end;
}

LabeledMatrix ReadScoreMatrix(std::istream &is) {
  std::string line;
  if (!std::getline(is, line)) throw ParseError("empty input", 1);
  std::size_t rows = 0, cols = 0;
  ParseHeader(line, &rows, &cols);

  LabeledMatrix out{ScoreMatrix(rows, cols), LabelMatrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    const int line_no = static_cast<int>(i) + 2;
    if (!std::getline(is, line))
      throw ParseError("expected " + std::to_string(rows) + " rows, got " +
                           std::to_string(i),
                       line_no);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view rest(line);
    std::size_t j = 0;
    while (true) {
      const std::size_t tab = rest.find('\t');
      std::string_view cell = rest.substr(0, tab);
      if (j >= cols)
        throw ParseError("ragged row: more than " + std::to_string(cols) +
                             " cells",
                         line_no);
      const std::size_t colon = cell.rfind(':');
      if (cell.empty() || cell.front() != '=' || colon == std::string_view::npos)
        throw ParseError("malformed cell '" + std::string(cell) +
                             "', expected '=<score>:<label>'",
                         line_no);
      const Label label = ParseLabel(cell.substr(colon + 1), line_no);
      double score = std::numeric_limits<double>::quiet_NaN();
      if (label != Label::kUnobserved) {
        std::string_view num = cell.substr(1, colon - 1);
        if (!ParseDouble(num, &score) || !std::isfinite(score))
          throw ParseError("non-numeric score '" + std::string(num) + "'",
                           line_no);
      }
      out.scores(i, j) = score;
      out.labels(i, j) = label;
      ++j;
      if (tab == std::string_view::npos) break;
      rest.remove_prefix(tab + 1);
    }
    if (j != cols)
      throw ParseError("ragged row: " + std::to_string(j) + " cells, expected " +
                           std::to_string(cols),
                       line_no);
  }
  while (std::getline(is, line)) {
    if (!line.empty() && line != "\r")
      throw ParseError("trailing content after " + std::to_string(rows) +
                           " rows",
                       0);
  }
  return out;
}

LabeledMatrix ReadScoreMatrix(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'", 0);
  try {
    return ReadScoreMatrix(is);
  } catch (const ParseError &e) {
    throw ParseError(path, e);
  }
}

void WriteScoreMatrix(const LabeledMatrix &matrix, std::ostream &os) {
  matrix.Validate();
  os << kMagic << " v1 rows=" << matrix.rows() << " cols=" << matrix.cols()
     << '\n';
  for (std::size_t i = 0; i < matrix.rows(); ++i) {
    for (std::size_t j = 0; j < matrix.cols(); ++j) {
      if (j > 0) os << '\t';
      const Label label = matrix.labels(i, j);
      os << '=' << (label == Label::kUnobserved ? "nan"
                                                : FormatScore(matrix.scores(i, j)))
         << ':' << LabelToken(label);
    }
    os << '\n';
  }
}

void WriteScoreMatrix(const LabeledMatrix &matrix, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  WriteScoreMatrix(matrix, os);
  if (!os) throw Error("write to '" + path + "' failed");
}

}  // namespace scorenorm

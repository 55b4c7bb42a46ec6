// src/cli/cli_io.cc

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

#include "scorenorm/cli/cli_io.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "scorenorm/errors.h"
#include "scorenorm/score_io.h"

namespace scorenorm {
namespace cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<std::string> SplitTabs(const std::string &line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return out;
}

std::optional<Hypothesis> ParseHypothesis(const std::string &token, int line) {
  if (token == "tar") return Hypothesis::kTarget;
  if (token == "non") return Hypothesis::kNontarget;
  if (token == "-") return std::nullopt;
  throw ParseError("unknown label '" + token + "' (expected tar, non or -)",
                   line);
}

const char *HypothesisToken(const std::optional<Hypothesis> &h) {
  if (!h) return "-";
  return *h == Hypothesis::kTarget ? "tar" : "non";
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'", 0);
  return is;
}

std::ofstream OpenOutput(const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  return os;
}

void StripCr(std::string *line) {
  if (!line->empty() && line->back() == '\r') line->pop_back();
}

std::vector<std::string> IdList(const json &doc, const char *what) {
  if (!doc.is_array())
    throw ParseError(std::string("cohort: '") + what + ".ids' must be a list",
                     0);
  std::vector<std::string> ids;
  for (const json &v : doc) ids.push_back(v.get<std::string>());
  return ids;
}

std::size_t FindId(const std::vector<std::string> &ids, const std::string &id,
                   const char *what) {
  for (std::size_t k = 0; k < ids.size(); ++k)
    if (ids[k] == id) return k;
  throw ValidationError(std::string("unknown ") + what + " id '" + id + "'");
}

}  // namespace

std::string ResolvePath(const std::string &anchor,
                        const std::string &relative) {
  const fs::path rel(relative);
  if (rel.is_absolute()) return relative;
  return (fs::path(anchor).parent_path() / rel).string();
}

std::vector<TrialRecord> ReadTrials(const std::string &path) {
  std::ifstream is = OpenInput(path);
  std::string line;
  if (!std::getline(is, line) || (StripCr(&line), line != "#scorenorm-trials v1"))
    throw ParseError(path + ": expected header '#scorenorm-trials v1'", 1);
  std::vector<TrialRecord> trials;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    StripCr(&line);
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitTabs(line);
    if (f.size() != 4 && f.size() != 5)
      throw ParseError(path + ": expected 4 or 5 fields", line_no);
    TrialRecord t;
    t.id = f[0];
    if (!ParseDouble(f[1], &t.score) || !std::isfinite(t.score))
      throw ParseError(path + ": non-numeric trial score '" + f[1] + "'",
                       line_no);
    t.enroll_id = f[2];
    t.test_id = f[3];
    if (f.size() == 5) t.label = ParseHypothesis(f[4], line_no);
    trials.push_back(std::move(t));
  }
  return trials;
}

void WriteTrials(const std::vector<TrialRecord> &trials,
                 const std::string &path) {
  std::ofstream os = OpenOutput(path);
  os << "#scorenorm-trials v1\n";
  for (const TrialRecord &t : trials) {
    os << t.id << '\t' << FormatScore(t.score) << '\t' << t.enroll_id << '\t'
       << t.test_id;
    if (t.label) os << '\t' << HypothesisToken(t.label);
    os << '\n';
  }
}

std::size_t Cohort::EnrollIndex(const std::string &id) const {
  return FindId(enroll_ids, id, "enrollment");
}

std::size_t Cohort::TestIndex(const std::string &id) const {
  return FindId(test_ids, id, "test");
}

TrialContext Cohort::Context(const TrialRecord &trial) const {
  const std::size_t r = EnrollIndex(trial.enroll_id);
  const std::size_t c = TestIndex(trial.test_id);
  const std::size_t n = inter.rows(), m = inter.cols();
  TrialContext ctx;
  ctx.trial_score = trial.score;
  ctx.inter = inter.scores;
  ctx.enroll_side.assign(enroll.scores.row(r).begin(),
                         enroll.scores.row(r).end());
  ctx.test_side.resize(n);
  ctx.cohort_labels = LabelMatrix(n + 1, m + 1);
  for (std::size_t i = 0; i < n; ++i) {
    ctx.test_side[i] = test.scores(i, c);
    ctx.cohort_labels(i, m) = test.labels(i, c);
    for (std::size_t j = 0; j < m; ++j)
      ctx.cohort_labels(i, j) = inter.labels(i, j);
  }
  for (std::size_t j = 0; j < m; ++j)
    ctx.cohort_labels(n, j) = enroll.labels(r, j);
  return ctx;
}

Cohort ReadCohort(const std::string &manifest_path) {
  std::ifstream is = OpenInput(manifest_path);
  json doc;
  try {
    doc = json::parse(is);
    if (doc.at("format").get<std::string>() != "scorenorm-cohort" ||
        doc.at("version").get<int>() != 1)
      throw ParseError(manifest_path + ": not a scorenorm-cohort v1 manifest",
                       0);
    Cohort c;
    c.inter = ReadScoreMatrix(
        ResolvePath(manifest_path, doc.at("inter").get<std::string>()));
    c.enroll = ReadScoreMatrix(ResolvePath(
        manifest_path, doc.at("enroll").at("scores").get<std::string>()));
    c.enroll_ids = IdList(doc.at("enroll").at("ids"), "enroll");
    c.test = ReadScoreMatrix(ResolvePath(
        manifest_path, doc.at("test").at("scores").get<std::string>()));
    c.test_ids = IdList(doc.at("test").at("ids"), "test");
    if (c.enroll.cols() != c.inter.cols() || c.enroll.rows() != c.enroll_ids.size())
      throw ShapeError(manifest_path +
                       ": enrollment matrix must be (#ids x M) with M the "
                       "inter-cohort column count");
    if (c.test.rows() != c.inter.rows() || c.test.cols() != c.test_ids.size())
      throw ShapeError(manifest_path +
                       ": test matrix must be (N x #ids) with N the "
                       "inter-cohort row count");
    return c;
  } catch (const json::exception &e) {
    throw ParseError(manifest_path + ": " + e.what(), 0);
  }
}

void WriteCohort(const Cohort &cohort, const std::string &manifest_path) {
  const std::string stem = fs::path(manifest_path).stem().string();
  const std::string inter = stem + "_inter.tsv", enroll = stem + "_enroll.tsv",
                    test = stem + "_test.tsv";
  WriteScoreMatrix(cohort.inter, ResolvePath(manifest_path, inter));
  WriteScoreMatrix(cohort.enroll, ResolvePath(manifest_path, enroll));
  WriteScoreMatrix(cohort.test, ResolvePath(manifest_path, test));
  json doc{{"format", "scorenorm-cohort"},
           {"version", 1},
           {"inter", inter},
           {"enroll", {{"scores", enroll}, {"ids", cohort.enroll_ids}}},
           {"test", {{"scores", test}, {"ids", cohort.test_ids}}}};
  std::ofstream os = OpenOutput(manifest_path);
  os << doc.dump(2) << '\n';
}

std::vector<ScoreRecord> ReadScores(const std::string &path) {
  std::ifstream is = OpenInput(path);
  std::string line;
  if (!std::getline(is, line) || (StripCr(&line),
                                  line.rfind("#scorenorm-scores v1", 0) != 0))
    throw ParseError(path + ": expected header '#scorenorm-scores v1'", 1);
  std::vector<ScoreRecord> out;
  int line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    StripCr(&line);
    if (line.empty()) continue;
    const std::vector<std::string> f = SplitTabs(line);
    if (f.size() < 3)
      throw ParseError(path + ": expected at least 3 fields", line_no);
    ScoreRecord r;
    r.id = f[0];
    r.label = ParseHypothesis(f[2], line_no);
    if (f[1] == "NA") {
      r.error = f.size() > 3 ? f[3] : "unknown error";
    } else {
      double v;
      if (!ParseDouble(f[1], &v) || !std::isfinite(v))
        throw ParseError(path + ": non-numeric score '" + f[1] + "'", line_no);
      r.score = v;
      if (f.size() > 3) {
        if (!ParseDouble(f[3], &v))
          throw ParseError(path + ": non-numeric posterior '" + f[3] + "'",
                           line_no);
        r.posterior = v;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

void WriteScores(const std::vector<ScoreRecord> &scores,
                 const std::string &method, const std::string &path) {
  std::ofstream os = OpenOutput(path);
  os << "#scorenorm-scores v1 method=" << method << '\n';
  for (const ScoreRecord &r : scores) {
    os << r.id << '\t' << (r.score ? FormatScore(*r.score) : "NA") << '\t'
       << HypothesisToken(r.label);
    if (r.score && r.posterior) os << '\t' << FormatScore(*r.posterior);
    if (!r.score) {
      std::string msg = r.error;
      for (char &ch : msg)
        if (ch == '\t' || ch == '\n' || ch == '\r') ch = ' ';
      os << '\t' << msg;
    }
    os << '\n';
  }
}

}  // namespace cli
}  // namespace scorenorm

// tests/score_io_test.cc

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
#include <cstring>
#include <limits>
#include <sstream>

#include <gtest/gtest.h>

#include "scorenorm/errors.h"
#include "scorenorm/score_io.h"
#include "test_util.h"

namespace scorenorm {
namespace {

LabeledMatrix RoundTrip(const LabeledMatrix &m) {
  std::stringstream ss;
  WriteScoreMatrix(m, ss);
  return ReadScoreMatrix(ss);
}

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

int ParseErrorLine(const std::string &text) {
  std::istringstream is(text);
  try {
    ReadScoreMatrix(is);
  } catch (const ParseError &e) {
    return e.line();
  }
  return -1;
}

TEST(ScoreIo, RoundTrip3x4) {
  Rng rng(5);
  LabeledMatrix m = testing::RandomGrid(&rng, 3, 4);
  LabeledMatrix back = RoundTrip(m);
  ASSERT_EQ(back.labels, m.labels);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (m.labels(i, j) != Label::kUnobserved) {
        EXPECT_TRUE(SameBits(back.scores(i, j), m.scores(i, j)));
      }
}

TEST(ScoreIo, BitExactProperty) {
  Rng rng(6);
  const double specials[] = {0.0,   -0.0,    5e-324, -2.2250738585072014e-308,
                             1e300, -1.7976931348623157e308, 0.1, 1.0 / 3.0};
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t r = testing::UniformInt(&rng, 1, 6);
    const std::size_t c = testing::UniformInt(&rng, 1, 6);
    LabeledMatrix m = testing::RandomGrid(&rng, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t j = 0; j < c; ++j) {
        if (m.labels(i, j) == Label::kUnobserved) continue;
        const double u = rng.Uniform();
        m.scores(i, j) = u < 0.3   ? specials[testing::UniformInt(&rng, 0, 7)]
                         : u < 0.6 ? std::ldexp(rng.Normal(), int(rng.Normal(0, 200)))
                                   : rng.Normal(0, 1e3);
      }
    }
    LabeledMatrix back = RoundTrip(m);
    ASSERT_EQ(back.labels, m.labels);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (m.labels(i, j) != Label::kUnobserved) {
          ASSERT_TRUE(SameBits(back.scores(i, j), m.scores(i, j)))
              << m.scores(i, j);
        }
  }
}

TEST(ScoreIo, NaCellIgnoresScoreField) {
  std::istringstream is(
      "#scorenorm-matrix v1 rows=1 cols=3\n=1.5:tar\t=whatever:NA\t=-2:non\n");
  LabeledMatrix m = ReadScoreMatrix(is);
  EXPECT_EQ(m.labels(0, 1), Label::kUnobserved);
  EXPECT_TRUE(std::isnan(m.scores(0, 1)));
  EXPECT_EQ(m.scores(0, 0), 1.5);
  EXPECT_EQ(m.labels(0, 2), Label::kNontarget);
}

TEST(ScoreIo, ErrorsNameLine) {
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=2 cols=2\n"
                           "=1:tar\t=2:non\n=3:non\n"),
            3);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=2 cols=2\n"
                           "=1:tar\t=2:non\t=4:non\n=3:non\t=1:tar\n"),
            2);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=1 cols=2\n=1:tar\t=x:non\n"),
            2);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=1 cols=1\n=1:maybe\n"), 2);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=1 cols=1\n=inf:tar\n"), 2);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v2 rows=1 cols=1\n=1:tar\n"), 1);
  EXPECT_EQ(ParseErrorLine("rows=1 cols=1\n=1:tar\n"), 1);
  EXPECT_EQ(ParseErrorLine("#scorenorm-matrix v1 rows=1 cols=1\n1:tar\n"), 2);
  EXPECT_NE(ParseErrorLine("#scorenorm-matrix v1 rows=1 cols=1\n=1:tar\n=2:tar\n"),
            -1);
  EXPECT_NE(ParseErrorLine("#scorenorm-matrix v1 rows=2 cols=1\n=1:tar\n"), -1);
}

TEST(ScoreIo, ErrorMessageMentionsLine) {
  std::istringstream is("#scorenorm-matrix v1 rows=2 cols=2\n=1:tar\t=2:non\n=3:non\n");
  try {
    ReadScoreMatrix(is);
    FAIL();
  } catch (const ParseError &e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(ScoreIo, WriteRejectsInvalid) {
  LabeledMatrix m{ScoreMatrix(1, 1, std::nan("")), LabelMatrix(1, 1)};
  std::ostringstream os;
  EXPECT_THROW(WriteScoreMatrix(m, os), ValidationError);
}

TEST(ScoreIo, FormatScoreRoundTrips) {
  double v = 0;
  ASSERT_TRUE(ParseDouble(FormatScore(0.1), &v));
  EXPECT_EQ(v, 0.1);
  EXPECT_TRUE(ParseDouble("+2.5", &v));
  EXPECT_EQ(v, 2.5);
  EXPECT_FALSE(ParseDouble("2.5x", &v));
  EXPECT_FALSE(ParseDouble("", &v));
}

}  // namespace
}  // namespace scorenorm

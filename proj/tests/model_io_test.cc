// tests/model_io_test.cc

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

#include <cstring>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "scorenorm/errors.h"
#include "scorenorm/model_io.h"
#include "test_util.h"

namespace scorenorm {
namespace {

bool SameBits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void ExpectBitEqual(const ClassParams &a, const ClassParams &b) {
  EXPECT_TRUE(SameBits(a.mean, b.mean));
  EXPECT_TRUE(SameBits(a.variance, b.variance));
  ASSERT_EQ(a.alpha.size(), b.alpha.size());
  for (Eigen::Index k = 0; k < a.alpha.size(); ++k) {
    EXPECT_TRUE(SameBits(a.alpha(k), b.alpha(k)));
    EXPECT_TRUE(SameBits(a.beta(k), b.beta(k)));
  }
}

TEST(ModelIo, BitExactRoundTrip) {
  Rng rng(1);
  for (int d = 0; d <= 4; ++d) {
    LgsmModel m{testing::RandomParams(&rng, d),
                {std::uint64_t(1) << 63, 17, -12345.678901234567, d % 2 == 0}};
    m.params.target().variance = 1.0 / 3.0;
    std::stringstream ss;
    WriteModel(m, ss);
    LgsmModel back = ReadModel(ss);
    EXPECT_EQ(back.params.dim(), d);
    ExpectBitEqual(back.params.target(), m.params.target());
    ExpectBitEqual(back.params.nontarget(), m.params.nontarget());
    EXPECT_EQ(back.training, m.training);
    EXPECT_TRUE(SameBits(back.training.final_objective, m.training.final_objective));
  }
}

TEST(ModelIo, SchemaChecks) {
  LgsmModel m{LgsmParams(1), {}};
  nlohmann::json doc = ModelToJson(m);
  EXPECT_EQ(doc.at("format"), "scorenorm-lgsm");
  EXPECT_EQ(doc.at("version"), 1);
  EXPECT_EQ(doc.at("dim"), 1);

  nlohmann::json bad = doc;
  bad["format"] = "other";
  EXPECT_THROW(ModelFromJson(bad), ParseError);
  bad = doc;
  bad["version"] = 2;
  EXPECT_THROW(ModelFromJson(bad), ParseError);
  bad = doc;
  bad["target"].erase("variance");
  EXPECT_THROW(ModelFromJson(bad), ParseError);
  bad = doc;
  bad["target"]["alpha"] = nlohmann::json::array({1.0, 2.0});
  EXPECT_THROW(ModelFromJson(bad), Error);
  bad = doc;
  bad["nontarget"]["variance"] = -1.0;
  EXPECT_THROW(ModelFromJson(bad), Error);
  bad = doc;
  bad["dim"] = -1;
  EXPECT_THROW(ModelFromJson(bad), ParseError);

  std::istringstream garbage("{not json");
  EXPECT_THROW(ReadModel(garbage), ParseError);
  EXPECT_THROW(ReadModel(std::string("/nonexistent/model.json")), ParseError);
}

TEST(ModelIo, ParamsOnlyDocument) {
  Rng rng(2);
  LgsmParams p = testing::RandomParams(&rng, 2);
  LgsmParams back = ParamsFromJson(ParamsToJson(p));
  ExpectBitEqual(back.target(), p.target());
  ExpectBitEqual(back.nontarget(), p.nontarget());
}

}  // namespace
}  // namespace scorenorm

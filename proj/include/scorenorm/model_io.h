// include/scorenorm/model_io.h

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

#ifndef SCORENORM_MODEL_IO_H_
#define SCORENORM_MODEL_IO_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "scorenorm/lgsm_params.h"

namespace scorenorm {

// Model file: a JSON document
//   {"format": "scorenorm-lgsm", "version": 1, "dim": D,
//    "target":    {"mean": m, "variance": v, "alpha": [..D], "beta": [..D]},
//    "nontarget": {...},
//    "training":  {"seed": s, "iterations": n, "final_objective": f,
//                  "converged": b}}
// Doubles are written in shortest round-trip form, so reading a written
// model gives back bit-identical parameters.

struct TrainingInfo {
  std::uint64_t seed = 0;
  int iterations = 0;
  double final_objective = 0.0;
  bool converged = false;

  bool operator==(const TrainingInfo &other) const = default;
};

struct LgsmModel {
  LgsmParams params;
  TrainingInfo training;
};

nlohmann::json ParamsToJson(const LgsmParams &params);
/// Throws ParseError on a missing or mistyped field, ValidationError on
/// invalid parameter values.
LgsmParams ParamsFromJson(const nlohmann::json &doc);

nlohmann::json ModelToJson(const LgsmModel &model);
LgsmModel ModelFromJson(const nlohmann::json &doc);

void WriteModel(const LgsmModel &model, std::ostream &os);
void WriteModel(const LgsmModel &model, const std::string &path);
LgsmModel ReadModel(std::istream &is);
LgsmModel ReadModel(const std::string &path);

}  // namespace scorenorm

#endif  // SCORENORM_MODEL_IO_H_

// src/model_io.cc

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

#include "scorenorm/model_io.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "scorenorm/errors.h"

namespace scorenorm {

namespace {

using nlohmann::json;

constexpr const char *kFormat = "scorenorm-lgsm";
constexpr int kVersion = 1;

json VectorToJson(const Eigen::VectorXd &v) {
  json out = json::array();
  for (Eigen::Index k = 0; k < v.size(); ++k) out.push_back(v(k));
  return out;
}

const json &Field(const json &doc, const char *key) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string("model: missing field '") + key + "'", 0);
  return doc.at(key);
}

double NumberField(const json &doc, const char *key) {
  const json &v = Field(doc, key);
  if (!v.is_number())
    throw ParseError(std::string("model: field '") + key + "' must be a number",
                     0);
  return v.get<double>();
}

Eigen::VectorXd VectorField(const json &doc, const char *key, int dim) {
  const json &v = Field(doc, key);
  if (!v.is_array() || v.size() != std::size_t(dim))
    throw ParseError(std::string("model: field '") + key +
                         "' must be an array of length " + std::to_string(dim),
                     0);
  Eigen::VectorXd out(dim);
  for (int k = 0; k < dim; ++k) {
    if (!v[k].is_number())
      throw ParseError(std::string("model: non-numeric entry in '") + key + "'",
                       0);
    out(k) = v[k].get<double>();
  }
  return out;
}

json ClassToJson(const ClassParams &p) {
  return json{{"mean", p.mean},
              {"variance", p.variance},
              {"alpha", VectorToJson(p.alpha)},
              {"beta", VectorToJson(p.beta)}};
}

ClassParams ClassFromJson(const json &doc, int dim) {
  ClassParams p;
  p.mean = NumberField(doc, "mean");
  p.variance = NumberField(doc, "variance");
  p.alpha = VectorField(doc, "alpha", dim);
  p.beta = VectorField(doc, "beta", dim);
  return p;
}

}  // namespace

json ParamsToJson(const LgsmParams &params) {
  return json{{"dim", params.dim()},
              {"target", ClassToJson(params.target())},
              {"nontarget", ClassToJson(params.nontarget())}};
}

LgsmParams ParamsFromJson(const json &doc) {
  const json &dim_field = Field(doc, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<int>() < 0)
    throw ParseError("model: 'dim' must be a non-negative integer", 0);
  const int dim = dim_field.get<int>();
  return LgsmParams(ClassFromJson(Field(doc, "target"), dim),
                    ClassFromJson(Field(doc, "nontarget"), dim));
}

json ModelToJson(const LgsmModel &model) {
  json doc = ParamsToJson(model.params);
  doc["format"] = kFormat;
  doc["version"] = kVersion;
  doc["training"] = json{{"seed", model.training.seed},
                         {"iterations", model.training.iterations},
                         {"final_objective", model.training.final_objective},
                         {"converged", model.training.converged}};
  return doc;
}

LgsmModel ModelFromJson(const json &doc) {
  const json &format = Field(doc, "format");
  if (!format.is_string() || format.get<std::string>() != kFormat)
    throw ParseError(std::string("model: format must be '") + kFormat + "'", 0);
  const json &version = Field(doc, "version");
  if (!version.is_number_integer() || version.get<int>() != kVersion)
    throw ParseError("model: unsupported version", 0);
  LgsmModel model{ParamsFromJson(doc), {}};
  if (doc.contains("training")) {
    const json &t = doc.at("training");
    model.training.seed = Field(t, "seed").get<std::uint64_t>();
    model.training.iterations = Field(t, "iterations").get<int>();
    model.training.final_objective = NumberField(t, "final_objective");
    model.training.converged = Field(t, "converged").get<bool>();
  }
  return model;
}

void WriteModel(const LgsmModel &model, std::ostream &os) {
  os << ModelToJson(model).dump(2) << '\n';
}

void WriteModel(const LgsmModel &model, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open '" + path + "' for writing");
  WriteModel(model, os);
}

LgsmModel ReadModel(std::istream &is) {
  json doc;
  try {
    doc = json::parse(is);
  } catch (const json::exception &e) {
    throw ParseError(std::string("model: ") + e.what(), 0);
  }
  try {
    return ModelFromJson(doc);
  } catch (const json::exception &e) {
    throw ParseError(std::string("model: ") + e.what(), 0);
  }
}

LgsmModel ReadModel(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw ParseError("cannot open '" + path + "'", 0);
  return ReadModel(is);
}

}  // namespace scorenorm

// src/lgsm_params.cc

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

#include "scorenorm/lgsm_params.h"

#include <cmath>
#include <string>

#include "scorenorm/errors.h"

namespace scorenorm {

bool ClassParams::operator==(const ClassParams &other) const {
  return mean == other.mean && variance == other.variance &&
         alpha.size() == other.alpha.size() && alpha == other.alpha &&
         beta.size() == other.beta.size() && beta == other.beta;
}

LgsmParams::LgsmParams(int dim) : dim_(dim) {
  if (dim < 0) throw ValidationError("hidden dimension must be >= 0");
  for (ClassParams *p : {&target_, &nontarget_}) {
    p->alpha = Eigen::VectorXd::Zero(dim);
    p->beta = Eigen::VectorXd::Zero(dim);
  }
}

LgsmParams::LgsmParams(ClassParams target, ClassParams nontarget)
    : dim_(static_cast<int>(target.alpha.size())),
      target_(std::move(target)),
      nontarget_(std::move(nontarget)) {
  Validate();
}

const ClassParams &LgsmParams::For(Label label) const {
  switch (label) {
    case Label::kTarget:
      return target_;
    case Label::kNontarget:
      return nontarget_;
    case Label::kUnobserved:
      break;
  }
  throw ValidationError("no parameters for an unobserved cell");
}

void LgsmParams::Validate() const {
  for (const auto &[name, p] :
       {std::pair<const char *, const ClassParams &>{"target", target_},
        {"nontarget", nontarget_}}) {
    if (p.alpha.size() != dim_ || p.beta.size() != dim_)
      throw ValidationError(std::string(name) + " loadings must have length " +
                            std::to_string(dim_));
    if (!std::isfinite(p.mean) || !p.alpha.allFinite() || !p.beta.allFinite())
      throw ValidationError(std::string(name) + " parameters must be finite");
    if (!(p.variance > 0.0) || !std::isfinite(p.variance))
      throw ValidationError(std::string(name) +
                            " variance must be positive and finite");
  }
}

}  // namespace scorenorm

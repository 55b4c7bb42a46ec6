// include/scorenorm/rng.h

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

#ifndef SCORENORM_RNG_H_
#define SCORENORM_RNG_H_

#include <cstdint>
#include <random>

namespace scorenorm {

/// SplitMix64 finalizer; maps (seed, stream) to a well-mixed 64-bit seed.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

/// Seeded generator with platform-independent output. The engine is
/// std::mt19937_64, whose sequence is fixed by the standard; normals use
/// Box-Muller on 53-bit uniforms rather than std::normal_distribution,
/// whose algorithm varies between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on the open interval (0, 1).
  double Uniform();
  double Normal();
  double Normal(double mean, double stddev) { return mean + stddev * Normal(); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace scorenorm

#endif  // SCORENORM_RNG_H_

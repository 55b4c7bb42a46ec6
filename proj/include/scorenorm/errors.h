// include/scorenorm/errors.h

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

#ifndef SCORENORM_ERRORS_H_
#define SCORENORM_ERRORS_H_

#include <stdexcept>
#include <string>

namespace scorenorm {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mismatched matrix or vector dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. Carries the offending line number (1-based, 0 when
/// the error is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(const std::string &what, int line);
  /// Prefixes an existing error (e.g. with a file name), keeping its line.
  ParseError(const std::string &prefix, const ParseError &inner);
  int line() const { return line_; }

 private:
  int line_;
};

/// A cohort too small or with (near) zero spread to standardize against.
class DegenerateCohortError : public Error {
 public:
  using Error::Error;
};

/// Failed factorization or a non-finite objective.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Training data that cannot support the requested model.
class TrainingError : public Error {
 public:
  using Error::Error;
};

/// Invalid parameter values or configuration.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace scorenorm

#endif  // SCORENORM_ERRORS_H_

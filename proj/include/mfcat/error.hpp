// Copyright 2026 The mfcat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mfcat {

enum class ErrorCode {
  ParseError,
  UnknownVariable,
  MalformedExponent,
  NonInvertibleDenominator,
  DivisionByZero,
  ExponentOverflow,
  InvalidField,
  ContextMismatch,
  ShapeMismatch,
  NoWeightsConfigured,
  NotAFactorization,
  ZeroSuperpotential,
  NotAMorphism,
  PolicyInfeasible,
  NonQuasiHomogeneous,
  VariableCollision,
  RelationViolated,
  WrongArity,
  NotUnivariate,
  SuperpotentialMismatch,
  NotNilpotentForm,
  ConstantSuperpotential,
  IndexOutOfRange,
  NotComposable,
  InvalidShape,
  Io,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the zero-based offset into the parsed text.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, const std::string& what, std::size_t offset)
      : Error(code, what), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace mfcat

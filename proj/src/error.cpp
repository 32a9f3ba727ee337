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

#include "mfcat/error.hpp"

namespace mfcat {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParseError: return "parse-error";
    case ErrorCode::UnknownVariable: return "unknown-variable";
    case ErrorCode::MalformedExponent: return "malformed-exponent";
    case ErrorCode::NonInvertibleDenominator: return "non-invertible-denominator";
    case ErrorCode::DivisionByZero: return "division-by-zero";
    case ErrorCode::ExponentOverflow: return "exponent-overflow";
    case ErrorCode::InvalidField: return "invalid-field";
    case ErrorCode::ContextMismatch: return "context-mismatch";
    case ErrorCode::ShapeMismatch: return "shape-mismatch";
    case ErrorCode::NoWeightsConfigured: return "no-weights-configured";
    case ErrorCode::NotAFactorization: return "not-a-factorization";
    case ErrorCode::ZeroSuperpotential: return "zero-superpotential";
    case ErrorCode::NotAMorphism: return "not-a-morphism";
    case ErrorCode::PolicyInfeasible: return "policy-infeasible";
    case ErrorCode::NonQuasiHomogeneous: return "non-quasi-homogeneous";
    case ErrorCode::VariableCollision: return "variable-collision";
    case ErrorCode::RelationViolated: return "relation-violated";
    case ErrorCode::WrongArity: return "wrong-arity";
    case ErrorCode::NotUnivariate: return "not-univariate";
    case ErrorCode::SuperpotentialMismatch: return "superpotential-mismatch";
    case ErrorCode::NotNilpotentForm: return "not-nilpotent-form";
    case ErrorCode::ConstantSuperpotential: return "constant-superpotential";
    case ErrorCode::IndexOutOfRange: return "index-out-of-range";
    case ErrorCode::NotComposable: return "not-composable";
    case ErrorCode::InvalidShape: return "invalid-shape";
    case ErrorCode::Io: return "io";
  }
  return "unknown";
}

}  // namespace mfcat

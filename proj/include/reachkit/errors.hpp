/*
 Copyright 2026 reachkit contributors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef REACHKIT_ERRORS_HPP
#define REACHKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reachkit {

enum class ErrorCode {
  not_controllable,
  repeated_eigenvalues,
  structure_violation,
  imaginary_residue,
  out_of_horizon,
  sigma_out_of_chamber,
  zero_direction,
  wrong_dimension,
  dimension_too_small,
  parse_error,
  validation_error,
};

const char* error_code_name(ErrorCode code);

/// All reachkit failures carry a machine-readable code; the CLI maps
/// numerical-precondition codes to exit 4 and validation codes to exit 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_controllable: return "NotControllable";
    case ErrorCode::repeated_eigenvalues: return "RepeatedEigenvalues";
    case ErrorCode::structure_violation: return "StructureViolation";
    case ErrorCode::imaginary_residue: return "ImaginaryResidue";
    case ErrorCode::out_of_horizon: return "OutOfHorizon";
    case ErrorCode::sigma_out_of_chamber: return "SigmaOutOfChamber";
    case ErrorCode::zero_direction: return "ZeroDirection";
    case ErrorCode::wrong_dimension: return "WrongDimension";
    case ErrorCode::dimension_too_small: return "DimensionTooSmall";
    case ErrorCode::parse_error: return "ParseError";
    case ErrorCode::validation_error: return "ValidationError";
  }
  return "UnknownError";
}

}  // namespace reachkit

#endif  // REACHKIT_ERRORS_HPP

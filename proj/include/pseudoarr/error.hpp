// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace pseudoarr {

enum class ErrorCode {
  InvalidCurve,
  TangentialContact,
  TooManyIntersections,
  VertexContact,
  TriplePoint,
  DuplicateId,
  DegenerateInput,
  UnknownId,
  IncompleteTriple,
  UnknownSignature,
  ConstructionFailed,
  DegenerateRadius,
  NoFullWeightFace,
  ReversalCheckFailed,
  ValidationFailed,
  BudgetExhausted,
  UnknownFamily,
  ParseError,
  IoError,
  InvalidArgument,
};

const char *to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pseudoarr

// Copyright 2026 The pivotforge Authors
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

#ifndef PIVOTFORGE__ERROR_HPP_
#define PIVOTFORGE__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace pivotforge
{

enum class ErrorCode {
  kInfeasiblePoint,
  kNotAVertex,
  kDimensionMismatch,
  kNotRepresentable,
  kMaxIterExceeded,
  kAmbiguous,
  kTie,
  kParseError,
  kTooLarge,
  kInvalidArgument,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
public:
  Error(ErrorCode code, const std::string & message)
  : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code)
  {
  }

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code)
{
  switch (code) {
    case ErrorCode::kInfeasiblePoint:
      return "INFEASIBLE_POINT";
    case ErrorCode::kNotAVertex:
      return "NOT_A_VERTEX";
    case ErrorCode::kDimensionMismatch:
      return "DIMENSION_MISMATCH";
    case ErrorCode::kNotRepresentable:
      return "NOT_REPRESENTABLE";
    case ErrorCode::kMaxIterExceeded:
      return "MAX_ITER_EXCEEDED";
    case ErrorCode::kAmbiguous:
      return "AMBIGUOUS";
    case ErrorCode::kTie:
      return "TIE";
    case ErrorCode::kParseError:
      return "PARSE_ERROR";
    case ErrorCode::kTooLarge:
      return "TOO_LARGE";
    case ErrorCode::kInvalidArgument:
      return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

}  // namespace pivotforge

#endif  // PIVOTFORGE__ERROR_HPP_

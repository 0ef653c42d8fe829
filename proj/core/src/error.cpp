// Copyright 2026 The mqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mqc/error.hpp"

namespace mqc {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return "NotHermitian";
    case ErrorCode::kNoConvergence: return "NoConvergence";
    case ErrorCode::kNotPositive: return "NotPositive";
    case ErrorCode::kNotUnitary: return "NotUnitary";
    case ErrorCode::kDimMismatch: return "DimMismatch";
    case ErrorCode::kInvalidBloch: return "InvalidBloch";
    case ErrorCode::kUnphysical: return "Unphysical";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidP: return "InvalidP";
    case ErrorCode::kNotUnit: return "NotUnit";
    case ErrorCode::kNotIntegerSpaced: return "NotIntegerSpaced";
    case ErrorCode::kAlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::kImaginaryResidue: return "ImaginaryResidue";
    case ErrorCode::kUndersampled: return "Undersampled";
    case ErrorCode::kSingularState: return "SingularState";
    case ErrorCode::kNegativeRadicand: return "NegativeRadicand";
    case ErrorCode::kMismatchedPaths: return "MismatchedPaths";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace mqc

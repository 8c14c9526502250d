// Copyright 2026 The Shufflesum Authors
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

#include "shufflesum/status.h"

#include <string>

namespace shufflesum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEpsilonOutOfRange:
      return "EpsilonOutOfRange";
    case ErrorCode::kDeltaOutOfRange:
      return "DeltaOutOfRange";
    case ErrorCode::kTOutOfRange:
      return "TOutOfRange";
    case ErrorCode::kBadDimension:
      return "BadDimension";
    case ErrorCode::kInvalidGamma:
      return "InvalidGamma";
    case ErrorCode::kInfeasibleGamma:
      return "InfeasibleGamma";
    case ErrorCode::kRequiresT1:
      return "RequiresT1";
    case ErrorCode::kGammaIsOne:
      return "GammaIsOne";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kBucketOutOfRange:
      return "BucketOutOfRange";
    case ErrorCode::kMOutOfRange:
      return "MOutOfRange";
    case ErrorCode::kNotNormalized:
      return "NotNormalized";
    case ErrorCode::kZeroRow:
      return "ZeroRow";
    case ErrorCode::kFileNotFound:
      return "FileNotFound";
    case ErrorCode::kMalformedRow:
      return "MalformedRow";
    case ErrorCode::kInsufficientData:
      return "InsufficientData";
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
  }
  return "Unknown";
}

std::string Error::ToString() const {
  std::string out(ErrorCodeName(code_));
  if (!message_.empty()) {
    out += ": ";
    out += message_;
  }
  return out;
}

}  // namespace shufflesum

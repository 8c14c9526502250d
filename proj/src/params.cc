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

#include "shufflesum/params.h"

#include <cmath>
#include <sstream>
#include <string>

namespace shufflesum {

std::string_view RegimeName(Regime regime) {
  return regime == Regime::kSmallEps ? "SmallEps" : "ModerateEps";
}

Result<PrivacyBudget> PrivacyBudget::Create(double epsilon, double delta) {
  // Written so NaN fails both checks.
  if (!(epsilon > 0.0 && epsilon < kMaxEpsilon)) {
    return Error(ErrorCode::kEpsilonOutOfRange,
                 "epsilon must lie in (0, 6), got " + std::to_string(epsilon));
  }
  if (!(delta > 0.0 && delta <= 1.0)) {
    return Error(ErrorCode::kDeltaOutOfRange,
                 "delta must lie in (0, 1], got " + std::to_string(delta));
  }
  return PrivacyBudget(epsilon, delta);
}

Result<ProtocolParams> ValidateParams(int d, int k, int64_t n, int t,
                                      double epsilon, double delta) {
  if (d < 1) {
    return Error(ErrorCode::kBadDimension,
                 "d must be at least 1, got " + std::to_string(d));
  }
  if (n < 2) {
    return Error(ErrorCode::kBadDimension,
                 "n must be at least 2, got " + std::to_string(n));
  }
  if (k < 1) {
    return Error(ErrorCode::kBadDimension,
                 "k must be at least 1, got " + std::to_string(k));
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(PrivacyBudget budget,
                              PrivacyBudget::Create(epsilon, delta));
  if (t < 1 || t > d) {
    return Error(ErrorCode::kTOutOfRange,
                 "t must lie in [1, d=" + std::to_string(d) + "], got " +
                     std::to_string(t));
  }
  return ProtocolParams(d, k, n, t, budget);
}

Result<ProtocolParams> ProtocolParams::WithGamma(double gamma) const {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return Error(ErrorCode::kInvalidGamma,
                 "gamma must lie in [0, 1], got " + std::to_string(gamma));
  }
  ProtocolParams copy = *this;
  copy.gamma_ = gamma;
  return copy;
}

Result<ProtocolParams> ProtocolParams::WithDimension(int d) const {
  SHUFFLESUM_ASSIGN_OR_RETURN(
      ProtocolParams copy,
      ValidateParams(d, k_, n_, t_, epsilon(), delta()));
  copy.gamma_ = gamma_;
  return copy;
}

std::string ProtocolParams::ToString() const {
  std::ostringstream out;
  out << "d=" << d_ << " k=" << k_ << " n=" << n_ << " t=" << t_
      << " eps=" << epsilon() << " delta=" << delta() << " gamma=" << gamma_;
  return out.str();
}

}  // namespace shufflesum

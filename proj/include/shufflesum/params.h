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

#ifndef SHUFFLESUM_PARAMS_H_
#define SHUFFLESUM_PARAMS_H_

#include <cstdint>
#include <string>

#include "shufflesum/status.h"

namespace shufflesum {

// Privacy analysis is split at epsilon = 1; the constants differ per side.
enum class Regime { kSmallEps, kModerateEps };

std::string_view RegimeName(Regime regime);

// Upper limit on epsilon covered by the accounting (exclusive).
inline constexpr double kMaxEpsilon = 6.0;

// (epsilon, delta) with 0 < epsilon < 6 and 0 < delta <= 1.
class PrivacyBudget {
 public:
  static Result<PrivacyBudget> Create(double epsilon, double delta);

  double epsilon() const { return epsilon_; }
  double delta() const { return delta_; }
  Regime regime() const {
    return epsilon_ < 1.0 ? Regime::kSmallEps : Regime::kModerateEps;
  }

 private:
  PrivacyBudget(double epsilon, double delta)
      : epsilon_(epsilon), delta_(delta) {}

  double epsilon_;
  double delta_;
};

// Parameters of one protocol instance: dimension d, quantization level k
// (buckets 0..k), n users each reporting t sampled coordinates, and blanket
// probability gamma. Immutable; gamma is attached with WithGamma().
class ProtocolParams {
 public:
  int d() const { return d_; }
  int k() const { return k_; }
  int64_t n() const { return n_; }
  int t() const { return t_; }
  double gamma() const { return gamma_; }
  const PrivacyBudget& budget() const { return budget_; }
  double epsilon() const { return budget_.epsilon(); }
  double delta() const { return budget_.delta(); }
  Regime regime() const { return budget_.regime(); }

  // Copy with gamma replaced. Fails with kInvalidGamma outside [0, 1].
  Result<ProtocolParams> WithGamma(double gamma) const;

  // Copy with dimension replaced (t must still fit).
  Result<ProtocolParams> WithDimension(int d) const;

  std::string ToString() const;

 private:
  friend Result<ProtocolParams> ValidateParams(int d, int k, int64_t n, int t,
                                               double epsilon, double delta);

  ProtocolParams(int d, int k, int64_t n, int t, PrivacyBudget budget)
      : d_(d), k_(k), n_(n), t_(t), budget_(budget) {}

  int d_;
  int k_;
  int64_t n_;
  int t_;
  double gamma_ = 0.0;
  PrivacyBudget budget_;
};

// Checks every parameter invariant. The result carries gamma = 0 until the
// accountant assigns one.
Result<ProtocolParams> ValidateParams(int d, int k, int64_t n, int t,
                                      double epsilon, double delta);

}  // namespace shufflesum

#endif  // SHUFFLESUM_PARAMS_H_

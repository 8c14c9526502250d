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

#ifndef SHUFFLESUM_ACCOUNTANT_H_
#define SHUFFLESUM_ACCOUNTANT_H_

#include <cstdint>
#include <optional>
#include <string_view>

#include "shufflesum/params.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Closed forms for the blanket probability. kGeneral composes t scalar views
// with advanced composition and works for any t; kTightT1 skips composition
// and is only valid for t = 1. kTightWhenT1 picks kTightT1 at t = 1 and
// kGeneral otherwise. All logarithms are natural.
enum class GammaFormula { kGeneral, kTightT1, kTightWhenT1 };

std::string_view GammaFormulaName(GammaFormula formula);

// Maps kTightWhenT1 to the concrete formula for `t`; identity otherwise.
GammaFormula ResolveFormula(GammaFormula formula, int t);

struct GammaChoice {
  double gamma = 0.0;
  GammaFormula formula = GammaFormula::kGeneral;
  Regime regime = Regime::kSmallEps;
};

// gamma = C d k ln(1/delta) ln(2t/delta) / ((n-1) eps^2), C = 56 for eps < 1
// and 2016 otherwise. kInfeasibleGamma when the value exceeds 1.
Result<GammaChoice> GammaGeneral(const ProtocolParams& params);

// eps < 1:  max{14 d k ln(2/delta) / ((n-1) eps^2), 27 d k / ((n-1) eps)}
// eps >= 1: max{80 d k ln(2/delta) / ((n-1) eps^2), 36 d k / (11 (n-1) eps)}
Result<GammaChoice> GammaTightT1(const ProtocolParams& params);

Result<GammaChoice> ComputeGamma(const ProtocolParams& params,
                                 GammaFormula formula);

// Per-view budget so that r composed views stay (eps, r*delta' + delta)-DP:
// eps / (2 sqrt(2 r ln(1/delta))) below eps = 1, eps / (12 sqrt(...)) above.
// Returns +infinity for delta = 1.
double EpsilonPrime(double epsilon, double delta, int r);

// Largest quantization level the bound optimizer will return.
inline constexpr int kMaxK = 1'000'000;

// Quantization level that minimizes the accuracy bound, rounded to the
// nearest integer and floored at 1. kGeneral uses
// (n-1) eps^2 / (4 A d ln(1/delta) ln(2t/delta)) with A = 28 or 1008;
// kTightT1 uses the t = 1 cube-root forms and fails with kRequiresT1
// otherwise.
Result<int> ChooseK(const ProtocolParams& params, GammaFormula formula);

struct BoundReport {
  int k_star = 1;
  double mse_bound = 0.0;    // normalized MSE of the average vector
  double sigma_bound = 0.0;  // matching standard deviation bound
};

// Accuracy bound at params.gamma() for the given formula family.
Result<BoundReport> MseBound(const ProtocolParams& params,
                             GammaFormula formula);

// How the transform pipeline's bound picks gamma. The dimension-m protocol
// either recomputes gamma with d := m or keeps the caller's gamma.
enum class GammaReading { kRecomputeForM, kKeepGiven };

// MseBound with m in place of d, plus the reconstruction energy of the
// discarded coefficients.
Result<double> FsaMseBound(const ProtocolParams& params, int m,
                           double recon_energy, GammaFormula formula,
                           GammaReading reading = GammaReading::kRecomputeForM);

// Exact evaluation of the binomial union bound the privacy proof reduces to.
// For one coordinate sampled s = ceil(2 (n-1) t / d) times with blanket
// probability gamma spread over k+1 buckets, N_phi ~ Bin(s, gamma/(k+1)) and
// N_theta = N_phi + 1. The report holds
//   Pr[N_theta >= c e^{eps'/2}] + Pr[N_phi <= c e^{-eps'/2}],
// with c = gamma s / (k+1),
// and passes iff that sum is at most delta / t.
struct AuditReport {
  int64_t s = 0;
  double c = 0.0;
  double epsilon_prime = 0.0;
  double log_upper_tail = 0.0;
  double log_lower_tail = 0.0;
  double log_prob_bound = 0.0;
  double prob_bound = 0.0;
  double threshold = 0.0;
  bool passes = false;
  // prob_bound is below the smallest normal double; log_prob_bound still
  // holds the exact value and `passes` is decided in log space.
  bool underflow = false;
};

// eps' defaults to EpsilonPrime(eps, delta, t).
Result<AuditReport> PrivacyAudit(
    const ProtocolParams& params, double gamma,
    std::optional<double> epsilon_prime_override = std::nullopt);

}  // namespace shufflesum

#endif  // SHUFFLESUM_ACCOUNTANT_H_

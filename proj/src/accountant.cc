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

#include "shufflesum/accountant.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "shufflesum/binomial.h"

namespace shufflesum {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool Small(const ProtocolParams& params) {
  return params.regime() == Regime::kSmallEps;
}

// (n - 1) as a double; the accounting is written in terms of the other users.
double Others(const ProtocolParams& params) {
  return static_cast<double>(params.n() - 1);
}

Result<GammaChoice> Finish(double gamma, GammaFormula formula,
                           const ProtocolParams& params) {
  if (!(gamma <= 1.0)) {
    return Error(ErrorCode::kInfeasibleGamma,
                 "gamma = " + std::to_string(gamma) + " exceeds 1 for " +
                     params.ToString() + "; n is too small for this budget");
  }
  return GammaChoice{gamma, formula, params.regime()};
}

Status RequireT1(const ProtocolParams& params) {
  if (params.t() != 1) {
    return Error(ErrorCode::kRequiresT1,
                 "the tightened formulas hold only for t = 1, got t = " +
                     std::to_string(params.t()));
  }
  return Status::Ok();
}

int RoundK(double k) {
  if (!std::isfinite(k) || k >= kMaxK) return kMaxK;
  return std::max(1, static_cast<int>(std::lround(k)));
}

}  // namespace

std::string_view GammaFormulaName(GammaFormula formula) {
  switch (formula) {
    case GammaFormula::kGeneral:
      return "general";
    case GammaFormula::kTightT1:
      return "tight";
    case GammaFormula::kTightWhenT1:
      return "auto";
  }
  return "unknown";
}

GammaFormula ResolveFormula(GammaFormula formula, int t) {
  if (formula != GammaFormula::kTightWhenT1) return formula;
  return t == 1 ? GammaFormula::kTightT1 : GammaFormula::kGeneral;
}

Result<GammaChoice> GammaGeneral(const ProtocolParams& params) {
  const double eps = params.epsilon();
  const double delta = params.delta();
  const double constant = Small(params) ? 56.0 : 2016.0;
  const double gamma = constant * params.d() * params.k() *
                       std::log(1.0 / delta) *
                       std::log(2.0 * params.t() / delta) /
                       (Others(params) * eps * eps);
  return Finish(gamma, GammaFormula::kGeneral, params);
}

Result<GammaChoice> GammaTightT1(const ProtocolParams& params) {
  SHUFFLESUM_RETURN_IF_ERROR(RequireT1(params));
  const double eps = params.epsilon();
  const double dk = static_cast<double>(params.d()) * params.k();
  const double log_term = std::log(2.0 / params.delta());
  const double others = Others(params);
  double gamma;
  if (Small(params)) {
    gamma = std::max(14.0 * dk * log_term / (others * eps * eps),
                     27.0 * dk / (others * eps));
  } else {
    gamma = std::max(80.0 * dk * log_term / (others * eps * eps),
                     36.0 * dk / (11.0 * others * eps));
  }
  return Finish(gamma, GammaFormula::kTightT1, params);
}

Result<GammaChoice> ComputeGamma(const ProtocolParams& params,
                                 GammaFormula formula) {
  formula = ResolveFormula(formula, params.t());
  return formula == GammaFormula::kGeneral ? GammaGeneral(params)
                                           : GammaTightT1(params);
}

double EpsilonPrime(double epsilon, double delta, int r) {
  const double divisor = epsilon < 1.0 ? 2.0 : 12.0;
  const double root = std::sqrt(2.0 * r * std::log(1.0 / delta));
  if (root == 0.0) return kInf;
  return epsilon / (divisor * root);
}

Result<int> ChooseK(const ProtocolParams& params, GammaFormula formula) {
  formula = ResolveFormula(formula, params.t());
  const double eps = params.epsilon();
  const double delta = params.delta();
  const double d = params.d();
  if (formula == GammaFormula::kGeneral) {
    const double a_eps = Small(params) ? 28.0 : 1008.0;
    const double k = Others(params) * eps * eps /
                     (4.0 * a_eps * d * std::log(1.0 / delta) *
                      std::log(2.0 * params.t() / delta));
    return RoundK(k);
  }
  SHUFFLESUM_RETURN_IF_ERROR(RequireT1(params));
  const auto n = static_cast<double>(params.n());
  const double log_term = std::log(2.0 / delta);
  double k;
  if (Small(params)) {
    k = std::min(std::cbrt(n * eps * eps / (28.0 * d * log_term)),
                 std::cbrt(n * eps / (54.0 * d)));
  } else {
    k = std::min(std::cbrt(n * eps * eps / (160.0 * d * log_term)),
                 std::cbrt(11.0 * n * eps / (72.0 * d)));
  }
  return RoundK(k);
}

Result<BoundReport> MseBound(const ProtocolParams& params,
                             GammaFormula formula) {
  formula = ResolveFormula(formula, params.t());
  const double eps = params.epsilon();
  const double delta = params.delta();
  const auto n = static_cast<double>(params.n());
  const double d = params.d();
  const double one_minus_gamma = 1.0 - params.gamma();

  // Shared dimension/size/blanket factors of every bound.
  const double mse_scale = std::pow(d, 8.0 / 3.0) /
                           (one_minus_gamma * one_minus_gamma *
                            std::pow(n, 5.0 / 3.0));
  const double sigma_scale =
      std::pow(d, 4.0 / 3.0) / (one_minus_gamma * std::pow(n, 5.0 / 6.0));

  BoundReport report;
  SHUFFLESUM_ASSIGN_OR_RETURN(report.k_star, ChooseK(params, formula));
  if (formula == GammaFormula::kGeneral) {
    const double t = params.t();
    const double logs = std::log(1.0 / delta) * std::log(2.0 * t / delta);
    const double lead = Small(params) ? 2.0 * t : 8.0 * t;
    const double inner = Small(params) ? 14.0 * logs : 63.0 * logs;
    report.mse_bound = lead * std::pow(inner, 2.0 / 3.0) * mse_scale /
                       std::pow(eps, 4.0 / 3.0);
    report.sigma_bound = std::sqrt(lead) * std::cbrt(inner) * sigma_scale /
                         std::pow(eps, 2.0 / 3.0);
    return report;
  }
  SHUFFLESUM_RETURN_IF_ERROR(RequireT1(params));
  const double log_term = std::log(2.0 / delta);
  if (Small(params)) {
    report.mse_bound =
        mse_scale *
        std::max(std::cbrt(98.0) * std::pow(log_term, 2.0 / 3.0) /
                     std::pow(eps, 4.0 / 3.0),
                 18.0 / std::pow(4.0 * eps, 2.0 / 3.0));
    report.sigma_bound =
        sigma_scale *
        std::max(std::pow(98.0, 1.0 / 6.0) * std::cbrt(log_term) /
                     std::pow(eps, 2.0 / 3.0),
                 std::sqrt(18.0) / std::cbrt(4.0 * eps));
  } else {
    report.mse_bound =
        mse_scale *
        std::max(2.0 * std::pow(20.0 * log_term, 2.0 / 3.0) /
                     std::pow(eps, 4.0 / 3.0),
                 2.0 * std::pow(9.0, 2.0 / 3.0) /
                     std::pow(11.0 * eps, 2.0 / 3.0));
    report.sigma_bound =
        sigma_scale *
        std::max(std::sqrt(2.0) * std::cbrt(20.0 * log_term) /
                     std::pow(eps, 2.0 / 3.0),
                 std::sqrt(2.0) * std::cbrt(9.0) / std::cbrt(11.0 * eps));
  }
  return report;
}

Result<double> FsaMseBound(const ProtocolParams& params, int m,
                           double recon_energy, GammaFormula formula,
                           GammaReading reading) {
  if (m < 1 || m > params.d()) {
    return Error(ErrorCode::kMOutOfRange,
                 "m must lie in [1, d=" + std::to_string(params.d()) +
                     "], got " + std::to_string(m));
  }
  if (!(recon_energy >= 0.0)) {
    return Error(ErrorCode::kInvalidArgument,
                 "reconstruction energy must be nonnegative");
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(ProtocolParams reduced, params.WithDimension(m));
  if (reading == GammaReading::kRecomputeForM) {
    SHUFFLESUM_ASSIGN_OR_RETURN(GammaChoice choice,
                                ComputeGamma(reduced, formula));
    SHUFFLESUM_ASSIGN_OR_RETURN(reduced, reduced.WithGamma(choice.gamma));
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(BoundReport bound, MseBound(reduced, formula));
  return bound.mse_bound + recon_energy;
}

Result<AuditReport> PrivacyAudit(const ProtocolParams& params, double gamma,
                                 std::optional<double> epsilon_prime_override) {
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return Error(ErrorCode::kInvalidGamma,
                 "gamma outside [0,1]: " + std::to_string(gamma));
  }
  AuditReport report;
  const double buckets = params.k() + 1.0;
  report.s = static_cast<int64_t>(
      std::ceil(2.0 * Others(params) * params.t() / params.d()));
  report.c = gamma * static_cast<double>(report.s) / buckets;
  report.epsilon_prime = epsilon_prime_override.value_or(
      EpsilonPrime(params.epsilon(), params.delta(), params.t()));
  const double p = gamma / buckets;

  // N_theta = Bin + 1 >= c e^{eps'/2}  <=>  Bin >= ceil(c e^{eps'/2} - 1).
  const double upper_cut =
      report.c * std::exp(report.epsilon_prime / 2.0) - 1.0;
  // N_phi = Bin <= c e^{-eps'/2}  <=>  Bin <= floor(c e^{-eps'/2}).
  const double lower_cut = report.c * std::exp(-report.epsilon_prime / 2.0);

  if (std::isinf(upper_cut)) {
    report.log_upper_tail = -kInf;
  } else {
    report.log_upper_tail = LogBinomialUpperTail(
        report.s, p, static_cast<int64_t>(std::ceil(upper_cut)));
  }
  report.log_lower_tail = LogBinomialLowerTail(
      report.s, p, static_cast<int64_t>(std::floor(lower_cut)));
  report.log_prob_bound =
      LogAddExp(report.log_upper_tail, report.log_lower_tail);
  report.prob_bound = std::exp(report.log_prob_bound);
  report.threshold = params.delta() / params.t();
  report.passes = report.log_prob_bound <= std::log(report.threshold);
  report.underflow = report.log_prob_bound > -kInf &&
                     report.prob_bound < std::numeric_limits<double>::min();
  return report;
}

}  // namespace shufflesum

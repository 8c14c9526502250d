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

#include "shufflesum/binomial.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace shufflesum {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log sum_{j=lo}^{hi} pmf(j), lo <= hi.
double LogPmfRangeSum(int64_t trials, double p, int64_t lo, int64_t hi) {
  std::vector<double> terms;
  terms.reserve(static_cast<size_t>(hi - lo + 1));
  double peak = kNegInf;
  for (int64_t j = lo; j <= hi; ++j) {
    const double term = LogBinomialPmf(trials, p, j);
    terms.push_back(term);
    peak = std::max(peak, term);
  }
  if (peak == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double term : terms) sum += std::exp(term - peak);
  return peak + std::log(sum);
}

}  // namespace

double LogBinomialPmf(int64_t trials, double p, int64_t successes) {
  if (successes < 0 || successes > trials) return kNegInf;
  if (p <= 0.0) return successes == 0 ? 0.0 : kNegInf;
  if (p >= 1.0) return successes == trials ? 0.0 : kNegInf;
  const auto s = static_cast<double>(trials);
  const auto j = static_cast<double>(successes);
  return std::lgamma(s + 1.0) - std::lgamma(j + 1.0) -
         std::lgamma(s - j + 1.0) + j * std::log(p) + (s - j) * std::log1p(-p);
}

double LogBinomialUpperTail(int64_t trials, double p, int64_t min_successes) {
  if (min_successes <= 0) return 0.0;
  if (min_successes > trials) return kNegInf;
  return LogPmfRangeSum(trials, p, min_successes, trials);
}

double LogBinomialLowerTail(int64_t trials, double p, int64_t max_successes) {
  if (max_successes < 0) return kNegInf;
  if (max_successes >= trials) return 0.0;
  return LogPmfRangeSum(trials, p, 0, max_successes);
}

double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  const double lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

}  // namespace shufflesum

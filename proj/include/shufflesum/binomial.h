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

#ifndef SHUFFLESUM_BINOMIAL_H_
#define SHUFFLESUM_BINOMIAL_H_

#include <cstdint>

namespace shufflesum {

// Exact Bin(trials, p) probabilities, evaluated in log space so that tails far
// below the double range stay representable. All return natural logs;
// -infinity means probability zero.
double LogBinomialPmf(int64_t trials, double p, int64_t successes);

// log Pr[X >= min_successes].
double LogBinomialUpperTail(int64_t trials, double p, int64_t min_successes);

// log Pr[X <= max_successes].
double LogBinomialLowerTail(int64_t trials, double p, int64_t max_successes);

// log(exp(a) + exp(b)).
double LogAddExp(double a, double b);

}  // namespace shufflesum

#endif  // SHUFFLESUM_BINOMIAL_H_

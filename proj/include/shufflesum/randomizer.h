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

#ifndef SHUFFLESUM_RANDOMIZER_H_
#define SHUFFLESUM_RANDOMIZER_H_

#include <span>
#include <vector>

#include "shufflesum/message.h"
#include "shufflesum/params.h"
#include "shufflesum/rng.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Inputs this far outside [0,1] are clamped rather than rejected.
inline constexpr double kDomainSlack = 1e-12;

// Stochastic fixed-point encoding: floor(xk) + Ber(xk - floor(xk)), so that
// E[result] = xk. When xk is integral no randomness is consumed.
Result<int> Quantize(double x, int k, Rng& rng);

// Generalized randomized response over {0..k}: keeps xbar with probability
// 1 - gamma, otherwise reports a uniform bucket.
Result<int> RandomizedResponse(int xbar, double gamma, int k, Rng& rng);

// Samples t distinct coordinates without replacement (partial Fisher-Yates),
// then quantizes and randomizes each one. Entries follow sampling order.
Result<Message> RandomizeVector(std::span<const double> x,
                                const ProtocolParams& params, Rng& rng);

// Sampling step of RandomizeVector on its own: t distinct values from
// {0..d-1}, uniformly without replacement, O(t) memory.
std::vector<int> SampleWithoutReplacement(int d, int t, Rng& rng);

}  // namespace shufflesum

#endif  // SHUFFLESUM_RANDOMIZER_H_

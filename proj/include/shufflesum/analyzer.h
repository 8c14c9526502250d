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

#ifndef SHUFFLESUM_ANALYZER_H_
#define SHUFFLESUM_ANALYZER_H_

#include <cstdint>
#include <vector>

#include "shufflesum/params.h"
#include "shufflesum/shuffler.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Per-coordinate totals before debiasing. zhat[l] = (sum of buckets reported
// for l) / k; counts[l] = number of such reports.
struct Aggregation {
  std::vector<double> zhat;
  std::vector<int64_t> counts;
};

struct SumEstimate {
  // Debiased estimate of the sum of sampled values, per coordinate.
  std::vector<double> z;
  std::vector<int64_t> counts;
  // Estimate of the average input vector: z * d / (n * t).
  std::vector<double> avg;
};

// Bucket sums are accumulated as integers and divided by k once, so the
// result does not depend on message order.
Result<Aggregation> Aggregate(const ShuffledBatch& batch,
                              const ProtocolParams& params);

// z = (zhat - gamma/2 * counts) / (1 - gamma). Subtracts the expected
// contribution of uniform reports (mean k/2, i.e. 1/2 after dividing by k).
// Fails with kGammaIsOne when params.gamma() == 1.
Result<SumEstimate> Debias(const Aggregation& aggregation,
                           const ProtocolParams& params);

}  // namespace shufflesum

#endif  // SHUFFLESUM_ANALYZER_H_

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

#include "shufflesum/analyzer.h"

#include <string>

namespace shufflesum {

Result<Aggregation> Aggregate(const ShuffledBatch& batch,
                              const ProtocolParams& params) {
  const int d = params.d();
  const int k = params.k();
  std::vector<int64_t> bucket_sums(static_cast<size_t>(d), 0);
  Aggregation out;
  out.counts.assign(static_cast<size_t>(d), 0);
  for (const Message& message : batch.messages()) {
    for (const Report& report : message.entries) {
      if (report.coord < 0 || report.coord >= d) {
        return Error(ErrorCode::kBadDimension,
                     "coordinate " + std::to_string(report.coord) +
                         " outside [0, " + std::to_string(d) + ")");
      }
      if (report.bucket < 0 || report.bucket > k) {
        return Error(ErrorCode::kBucketOutOfRange,
                     "bucket " + std::to_string(report.bucket) +
                         " outside {0.." + std::to_string(k) + "}");
      }
      bucket_sums[report.coord] += report.bucket;
      ++out.counts[report.coord];
    }
  }
  out.zhat.resize(static_cast<size_t>(d));
  for (int l = 0; l < d; ++l) {
    out.zhat[l] = static_cast<double>(bucket_sums[l]) / k;
  }
  return out;
}

Result<SumEstimate> Debias(const Aggregation& aggregation,
                           const ProtocolParams& params) {
  const double gamma = params.gamma();
  if (gamma >= 1.0) {
    return Error(ErrorCode::kGammaIsOne,
                 "debiasing divides by 1 - gamma; gamma must be below 1");
  }
  const size_t d = aggregation.zhat.size();
  if (aggregation.counts.size() != d || static_cast<int>(d) != params.d()) {
    return Error(ErrorCode::kBadDimension, "aggregation shape mismatch");
  }
  const double scale = static_cast<double>(params.d()) /
                       (static_cast<double>(params.n()) * params.t());
  SumEstimate out;
  out.counts = aggregation.counts;
  out.z.resize(d);
  out.avg.resize(d);
  for (size_t l = 0; l < d; ++l) {
    if (aggregation.counts[l] < 0) {
      return Error(ErrorCode::kInvalidArgument, "negative count");
    }
    out.z[l] = (aggregation.zhat[l] -
                0.5 * gamma * static_cast<double>(aggregation.counts[l])) /
               (1.0 - gamma);
    out.avg[l] = out.z[l] * scale;
  }
  return out;
}

}  // namespace shufflesum

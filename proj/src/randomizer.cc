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

#include "shufflesum/randomizer.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace shufflesum {

Result<int> Quantize(double x, int k, Rng& rng) {
  if (k < 1) {
    return Error(ErrorCode::kBadDimension, "k must be at least 1");
  }
  if (!(x >= -kDomainSlack && x <= 1.0 + kDomainSlack)) {
    return Error(ErrorCode::kDomainError,
                 "value outside [0,1]: " + std::to_string(x));
  }
  x = std::clamp(x, 0.0, 1.0);
  const double scaled = x * k;
  const double floor_value = std::floor(scaled);
  const double frac = scaled - floor_value;
  int out = static_cast<int>(floor_value);
  if (frac > 0.0 && rng.Uniform01() < frac) ++out;
  return out;
}

Result<int> RandomizedResponse(int xbar, double gamma, int k, Rng& rng) {
  if (xbar < 0 || xbar > k) {
    return Error(ErrorCode::kBucketOutOfRange,
                 "bucket " + std::to_string(xbar) + " outside {0.." +
                     std::to_string(k) + "}");
  }
  if (!(gamma >= 0.0 && gamma <= 1.0)) {
    return Error(ErrorCode::kInvalidGamma,
                 "gamma outside [0,1]: " + std::to_string(gamma));
  }
  if (rng.Bernoulli(gamma)) {
    return static_cast<int>(rng.UniformInt(static_cast<uint64_t>(k) + 1));
  }
  return xbar;
}

std::vector<int> SampleWithoutReplacement(int d, int t, Rng& rng) {
  // Partial Fisher-Yates over a virtual identity array; only displaced
  // slots are stored.
  std::vector<std::pair<int, int>> displaced;
  displaced.reserve(static_cast<size_t>(t));
  auto value_at = [&displaced](int slot) {
    for (const auto& [s, v] : displaced) {
      if (s == slot) return v;
    }
    return slot;
  };
  auto set_slot = [&displaced](int slot, int value) {
    for (auto& [s, v] : displaced) {
      if (s == slot) {
        v = value;
        return;
      }
    }
    displaced.emplace_back(slot, value);
  };

  std::vector<int> picked;
  picked.reserve(static_cast<size_t>(t));
  for (int i = 0; i < t; ++i) {
    const int j = i + static_cast<int>(rng.UniformInt(
                          static_cast<uint64_t>(d - i)));
    const int vi = value_at(i);
    const int vj = value_at(j);
    set_slot(j, vi);
    set_slot(i, vj);
    picked.push_back(vj);
  }
  return picked;
}

Result<Message> RandomizeVector(std::span<const double> x,
                                const ProtocolParams& params, Rng& rng) {
  if (static_cast<int>(x.size()) != params.d()) {
    return Error(ErrorCode::kBadDimension,
                 "vector has " + std::to_string(x.size()) +
                     " coordinates, params expect d=" +
                     std::to_string(params.d()));
  }
  Message message;
  message.entries.reserve(static_cast<size_t>(params.t()));
  for (int coord : SampleWithoutReplacement(params.d(), params.t(), rng)) {
    SHUFFLESUM_ASSIGN_OR_RETURN(int xbar, Quantize(x[coord], params.k(), rng));
    SHUFFLESUM_ASSIGN_OR_RETURN(
        int bucket, RandomizedResponse(xbar, params.gamma(), params.k(), rng));
    message.entries.push_back({coord, bucket});
  }
  return message;
}

}  // namespace shufflesum

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

#include "shufflesum/protocol.h"

#include <string>
#include <utility>
#include <vector>

#include "shufflesum/randomizer.h"
#include "shufflesum/rng.h"
#include "shufflesum/shuffler.h"

namespace shufflesum {

Result<SumEstimate> RunProtocol(const Matrix& inputs,
                                const ProtocolParams& params, TrialSeed seed) {
  const auto n = static_cast<uint64_t>(params.n());
  if (inputs.rows() != n || inputs.cols() != static_cast<size_t>(params.d())) {
    return Error(ErrorCode::kBadDimension,
                 "inputs are " + std::to_string(inputs.rows()) + "x" +
                     std::to_string(inputs.cols()) + ", params expect " +
                     std::to_string(n) + "x" + std::to_string(params.d()));
  }
  std::vector<Message> messages;
  messages.reserve(n);
  for (uint64_t i = 0; i < n; ++i) {
    Rng rng(UserStream(seed.master_seed, seed.trial, n, i));
    SHUFFLESUM_ASSIGN_OR_RETURN(Message message,
                                RandomizeVector(inputs.row(i), params, rng));
    messages.push_back(std::move(message));
  }
  Rng shuffle_rng(ShuffleStream(seed.master_seed, seed.trial));
  const ShuffledBatch batch = Shuffle(std::move(messages), shuffle_rng);
  SHUFFLESUM_ASSIGN_OR_RETURN(Aggregation aggregation,
                              Aggregate(batch, params));
  return Debias(aggregation, params);
}

}  // namespace shufflesum

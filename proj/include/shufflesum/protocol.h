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

#ifndef SHUFFLESUM_PROTOCOL_H_
#define SHUFFLESUM_PROTOCOL_H_

#include <cstdint>

#include "shufflesum/analyzer.h"
#include "shufflesum/dataset.h"
#include "shufflesum/params.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Names one protocol execution. User i of trial r randomizes with
// UserStream(master_seed, r, n, i); the shuffler uses
// ShuffleStream(master_seed, r).
struct TrialSeed {
  uint64_t master_seed = 0;
  uint64_t trial = 0;
};

// Runs randomize -> shuffle -> aggregate -> debias over the rows of
// `inputs`, which must be params.n() x params.d() with entries in [0,1].
Result<SumEstimate> RunProtocol(const Matrix& inputs,
                                const ProtocolParams& params, TrialSeed seed);

}  // namespace shufflesum

#endif  // SHUFFLESUM_PROTOCOL_H_

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

#include "shufflesum/shuffler.h"

#include <utility>

namespace shufflesum {

ShuffledBatch Shuffle(std::vector<Message> messages, Rng& rng) {
  for (size_t i = messages.size(); i > 1; --i) {
    const size_t j = static_cast<size_t>(rng.UniformInt(i));
    std::swap(messages[i - 1], messages[j]);
  }
  return ShuffledBatch(std::move(messages));
}

}  // namespace shufflesum

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

#ifndef SHUFFLESUM_SHUFFLER_H_
#define SHUFFLESUM_SHUFFLER_H_

#include <vector>

#include "shufflesum/message.h"
#include "shufflesum/rng.h"

namespace shufflesum {

// Messages after the trusted shuffler: same multiset, uniformly permuted.
// Whole messages move; a user's reports stay together.
class ShuffledBatch {
 public:
  const std::vector<Message>& messages() const { return messages_; }
  size_t size() const { return messages_.size(); }

  // Wraps messages without permuting them. For tests and for showing that
  // the analyzer does not depend on order.
  static ShuffledBatch Unshuffled(std::vector<Message> messages) {
    return ShuffledBatch(std::move(messages));
  }

 private:
  friend ShuffledBatch Shuffle(std::vector<Message> messages, Rng& rng);

  explicit ShuffledBatch(std::vector<Message> messages)
      : messages_(std::move(messages)) {}

  std::vector<Message> messages_;
};

// Fisher-Yates permutation; every ordering is equally likely.
ShuffledBatch Shuffle(std::vector<Message> messages, Rng& rng);

}  // namespace shufflesum

#endif  // SHUFFLESUM_SHUFFLER_H_

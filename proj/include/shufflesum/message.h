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

#ifndef SHUFFLESUM_MESSAGE_H_
#define SHUFFLESUM_MESSAGE_H_

#include <compare>
#include <vector>

namespace shufflesum {

// One randomized report: coordinate label (0-based) and bucket in {0..k}.
struct Report {
  int coord = 0;
  int bucket = 0;

  auto operator<=>(const Report&) const = default;
};

// A single user's submission: t reports with distinct coordinates.
struct Message {
  std::vector<Report> entries;

  auto operator<=>(const Message&) const = default;
};

}  // namespace shufflesum

#endif  // SHUFFLESUM_MESSAGE_H_

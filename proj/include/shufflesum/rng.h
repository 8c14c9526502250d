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

#ifndef SHUFFLESUM_RNG_H_
#define SHUFFLESUM_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace shufflesum {

// Identifies one independent random stream. Two Rng objects built from equal
// specs produce identical sequences, whatever thread builds them and in
// whatever order.
struct RngSpec {
  uint64_t master_seed = 0;
  uint64_t stream_id = 0;

  bool operator==(const RngSpec&) const = default;
};

// Stream assignment for protocol simulation. Users get stream
// trial * n + user under the caller's master seed; the shuffler and the
// dataset generators draw from master seeds tagged away from the user space
// so they never collide with a user stream.
RngSpec UserStream(uint64_t master_seed, uint64_t trial, uint64_t n,
                   uint64_t user);
RngSpec ShuffleStream(uint64_t master_seed, uint64_t trial);
RngSpec DatasetStream(uint64_t master_seed, uint64_t row);

// xoshiro256** seeded through SplitMix64. Satisfies
// UniformRandomBitGenerator, but the draw helpers below are what the library
// uses: they are defined bit-for-bit here rather than by the standard
// library's implementation-defined distributions.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(RngSpec spec);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform on [0, 1) with 53 bits of resolution.
  double Uniform01();

  // Uniform on {0, ..., bound - 1}; bound must be positive.
  uint64_t UniformInt(uint64_t bound);

  // true with probability p. Consumes no randomness when p <= 0 or p >= 1.
  bool Bernoulli(double p);

 private:
  std::array<uint64_t, 4> state_;
};

}  // namespace shufflesum

#endif  // SHUFFLESUM_RNG_H_

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

#include "shufflesum/rng.h"

#include <cstdint>

namespace shufflesum {
namespace {

constexpr uint64_t kShuffleTag = 0x53485546464c4552ULL;  // "SHUFFLER"
constexpr uint64_t kDatasetTag = 0x4441544153455453ULL;  // "DATASETS"

uint64_t SplitMix64(uint64_t& x) {
  x += 0x9e3779b97f4a7c15ULL;
  uint64_t z = x;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

uint64_t Mix(uint64_t a, uint64_t b) {
  uint64_t x = a;
  uint64_t h = SplitMix64(x);
  x = h ^ b;
  return SplitMix64(x);
}

constexpr uint64_t Rotl(uint64_t x, int k) {
  return (x << k) | (x >> (64 - k));
}

}  // namespace

RngSpec UserStream(uint64_t master_seed, uint64_t trial, uint64_t n,
                   uint64_t user) {
  return {master_seed, trial * n + user};
}

RngSpec ShuffleStream(uint64_t master_seed, uint64_t trial) {
  return {Mix(master_seed, kShuffleTag), trial};
}

RngSpec DatasetStream(uint64_t master_seed, uint64_t row) {
  return {Mix(master_seed, kDatasetTag), row};
}

Rng::Rng(RngSpec spec) {
  uint64_t x = Mix(spec.master_seed, spec.stream_id);
  for (auto& word : state_) word = SplitMix64(x);
}

Rng::result_type Rng::operator()() {
  const uint64_t result = Rotl(state_[1] * 5, 7) * 9;
  const uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = Rotl(state_[3], 45);
  return result;
}

double Rng::Uniform01() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

uint64_t Rng::UniformInt(uint64_t bound) {
  // Lemire's nearly-divisionless rejection method.
  uint64_t x = (*this)();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  uint64_t low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = (*this)();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

bool Rng::Bernoulli(double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return Uniform01() < p;
}

}  // namespace shufflesum

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

#ifndef SHUFFLESUM_SYNTH_H_
#define SHUFFLESUM_SYNTH_H_

#include <cstdint>

#include "shufflesum/dataset.h"

namespace shufflesum {

// Rows x_i[j] = clamp01((1 + sin(2 pi f j / d + phase_i)) / 2 + noise_ij),
// j = 1..d, with f = 2, phase_i ~ U[0, 2 pi), noise ~ U[-0.05, 0.05].
// Row i draws only from DatasetStream(seed, i).
Matrix SinusoidalRows(int d, int n, uint64_t seed);

// SinusoidalRows wrapped as an unnormalized synthetic dataset. d, n >= 1.
InputDataset SynthSinusoidal(int d, int n, uint64_t seed);

// Number of samples per heartbeat row, excluding the label column.
inline constexpr int kHeartbeatSamples = 187;

// Heartbeat-shaped stand-in for the public ECG heartbeat CSV: n rows of
// kHeartbeatSamples values plus a trailing label column (always 0).
//
// Each row is one beat sampled at 125 Hz, starting at an R peak and spanning
// 1.2 RR intervals (RR ~ U[0.6, 1.2] s). The beat is a sum of Gaussian P, Q,
// R, S and T waves with jittered amplitudes, a slow baseline wander and white
// noise; it is min-max scaled to [0,1] and zero padded, the same
// preprocessing the public file uses.
Matrix HeartbeatRows(int n, uint64_t seed);

}  // namespace shufflesum

#endif  // SHUFFLESUM_SYNTH_H_

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

#include "shufflesum/synth.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "shufflesum/rng.h"

namespace shufflesum {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double Uniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.Uniform01();
}

// Box-Muller; one normal per call keeps the draw count per sample fixed.
double StandardNormal(Rng& rng) {
  const double u1 = 1.0 - rng.Uniform01();  // (0, 1]
  const double u2 = rng.Uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

}  // namespace

Matrix SinusoidalRows(int d, int n, uint64_t seed) {
  constexpr double kFrequency = 2.0;
  constexpr double kNoise = 0.05;
  Matrix out(static_cast<size_t>(n), static_cast<size_t>(d));
  for (int i = 0; i < n; ++i) {
    Rng rng(DatasetStream(seed, static_cast<uint64_t>(i)));
    const double phase = kTwoPi * rng.Uniform01();
    auto row = out.row(static_cast<size_t>(i));
    for (int j = 1; j <= d; ++j) {
      const double clean =
          (1.0 + std::sin(kTwoPi * kFrequency * j / d + phase)) / 2.0;
      row[j - 1] = std::clamp(clean + Uniform(rng, -kNoise, kNoise), 0.0, 1.0);
    }
  }
  return out;
}

InputDataset SynthSinusoidal(int d, int n, uint64_t seed) {
  // Entries are clamped and n, d >= 1, so creation cannot fail.
  return InputDataset::Create(SinusoidalRows(d, n, seed),
                              DataSource::kSynthetic, Normalization::kNone)
      .value();
}

Matrix HeartbeatRows(int n, uint64_t seed) {
  constexpr double kSampleRate = 125.0;
  Matrix out(static_cast<size_t>(n), kHeartbeatSamples + 1);
  std::vector<double> beat;
  for (int i = 0; i < n; ++i) {
    Rng rng(DatasetStream(seed, static_cast<uint64_t>(i)));
    const double rr = Uniform(rng, 0.6, 1.2);
    const int len = std::min(
        kHeartbeatSamples,
        static_cast<int>(std::lround(1.2 * rr * kSampleRate)));
    const double q_amp = -0.25 * Uniform(rng, 0.5, 1.5);
    const double t_amp = 0.3 * Uniform(rng, 0.6, 1.4);
    const double p_amp = 0.12 * Uniform(rng, 0.5, 1.5);
    const double wander_freq = Uniform(rng, 0.1, 0.5);
    const double wander_phase = Uniform(rng, 0.0, kTwoPi);
    struct Wave {
      double center, amp, width;
    };
    const Wave waves[] = {
        {0.0, 1.0, 0.012},                        // R at the window start
        {0.04, q_amp, 0.015},                     // S
        {0.3 * std::sqrt(rr), t_amp, 0.06},       // T
        {rr - 0.16, p_amp, 0.03},                 // next P
        {rr - 0.04, -0.1, 0.012},                 // next Q
        {rr, 1.0, 0.012},                         // next R
    };
    beat.assign(static_cast<size_t>(len), 0.0);
    for (int s = 0; s < len; ++s) {
      const double tau = s / kSampleRate;
      double v = 0.05 * std::sin(kTwoPi * wander_freq * tau + wander_phase);
      for (const Wave& w : waves) {
        const double z = (tau - w.center) / w.width;
        v += w.amp * std::exp(-0.5 * z * z);
      }
      beat[s] = v + 0.01 * StandardNormal(rng);
    }
    const auto [lo, hi] = std::minmax_element(beat.begin(), beat.end());
    const double low = *lo;
    const double span = *hi - *lo;
    auto row = out.row(static_cast<size_t>(i));
    for (int s = 0; s < len; ++s) row[s] = (beat[s] - low) / span;
  }
  return out;
}

}  // namespace shufflesum

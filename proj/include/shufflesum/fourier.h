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

#ifndef SHUFFLESUM_FOURIER_H_
#define SHUFFLESUM_FOURIER_H_

#include <optional>
#include <span>
#include <vector>

#include "shufflesum/accountant.h"
#include "shufflesum/dataset.h"
#include "shufflesum/params.h"
#include "shufflesum/protocol.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Real spectrum of a length-d real vector under an orthogonal transform:
// [DC, sqrt2*Re c_1, sqrt2*Im c_1, ..., (alternating Nyquist term if d even)].
struct PackedSpectrum {
  std::vector<double> coeffs;
};

// The packed real DFT as an explicit d x d orthogonal matrix T:
//   row 0        = 1/sqrt(d)
//   row 2l-1, j  = sqrt(2/d) cos(2 pi l j / d)
//   row 2l,   j  = sqrt(2/d) sin(2 pi l j / d)     for l = 1..floor((d-1)/2)
//   row d-1,  j  = (-1)^j / sqrt(d)                  when d is even
// Application is O(d^2), which is fine at the dimensions simulated here.
class OrthogonalDft {
 public:
  explicit OrthogonalDft(int d);

  int dim() const { return d_; }
  const Matrix& basis() const { return basis_; }

  PackedSpectrum Forward(std::span<const double> x) const;

  // First m packed coefficients; skips the rows that would be discarded.
  std::vector<double> ForwardPrefix(std::span<const double> x, int m) const;

  // T^T * coeffs.
  std::vector<double> Inverse(const PackedSpectrum& spectrum) const;

 private:
  int d_;
  Matrix basis_;
};

// Keeps the first m coefficients and zeroes the rest. kMOutOfRange unless
// 1 <= m <= d.
Result<PackedSpectrum> TruncatePad(const PackedSpectrum& spectrum, int m);

// Energy of the discarded tail, sum_{j >= m} coeffs_j^2. By orthogonality
// this equals the squared error of reconstructing from the first m.
Result<double> ReconstructionEnergy(const PackedSpectrum& spectrum, int m);

// (c + 1) / 2. Inputs must lie in [-1, 1] up to a 1e-12 slack, which is
// clamped; anything further out is a kDomainError.
Result<double> RemapToUnit(double c);

// 2u - 1. Total: applied to noisy estimates that may leave [0, 1].
double RemapFromUnit(double u);

// kFourier is the Fourier summation pipeline; kIdentity is the same pipeline
// with the forward and inverse transforms removed (keep the first m raw
// coordinates).
enum class TransformMode { kFourier, kIdentity };

struct TransformOptions {
  int m = 1;
  GammaFormula formula = GammaFormula::kTightT1;
  // Replaces the accountant's gamma (e.g. 0 for noiseless checks).
  std::optional<double> gamma_override;
};

// Compress -> remap -> shuffle-model protocol on m dimensions -> remap back
// -> pad -> inverse. The n compressed inputs are computed once in Create()
// and reused by every trial.
class TransformPipeline {
 public:
  // `params` describes the full-dimension protocol (params.d() must equal
  // dataset.d()); the inner protocol runs with d := m and gamma recomputed
  // for m unless overridden. The dataset must be L1-normalized.
  static Result<TransformPipeline> Create(const InputDataset& dataset,
                                          const ProtocolParams& params,
                                          const TransformOptions& options,
                                          TransformMode mode);

  // One protocol execution; returns the estimated average vector (length d).
  Result<std::vector<double>> RunTrial(TrialSeed seed) const;

  // The estimate with no randomization at all: only the truncation loss.
  std::vector<double> NoiselessEstimate() const;

  const ProtocolParams& inner_params() const { return inner_; }
  int m() const { return inner_.d(); }
  int d() const { return d_; }
  TransformMode mode() const { return mode_; }

 private:
  TransformPipeline(TransformMode mode, int d, ProtocolParams inner,
                    Matrix unit_inputs, std::vector<double> mean_prefix,
                    std::optional<OrthogonalDft> dft)
      : mode_(mode),
        d_(d),
        inner_(inner),
        unit_inputs_(std::move(unit_inputs)),
        mean_prefix_(std::move(mean_prefix)),
        dft_(std::move(dft)) {}

  std::vector<double> Reconstruct(std::span<const double> prefix) const;

  TransformMode mode_;
  int d_;
  ProtocolParams inner_;
  Matrix unit_inputs_;
  std::vector<double> mean_prefix_;
  std::optional<OrthogonalDft> dft_;
};

// Single-shot helpers around TransformPipeline.
Result<std::vector<double>> FsaRun(const InputDataset& dataset,
                                   const ProtocolParams& params,
                                   const TransformOptions& options,
                                   TrialSeed seed);
Result<std::vector<double>> BaselineRun(const InputDataset& dataset,
                                        const ProtocolParams& params,
                                        const TransformOptions& options,
                                        TrialSeed seed);

}  // namespace shufflesum

#endif  // SHUFFLESUM_FOURIER_H_

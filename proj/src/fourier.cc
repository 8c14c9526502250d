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

#include "shufflesum/fourier.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

namespace shufflesum {
namespace {

Status CheckM(int m, size_t d) {
  if (m < 1 || static_cast<size_t>(m) > d) {
    return Error(ErrorCode::kMOutOfRange,
                 "m must lie in [1, " + std::to_string(d) + "], got " +
                     std::to_string(m));
  }
  return Status::Ok();
}

}  // namespace

OrthogonalDft::OrthogonalDft(int d) : d_(d), basis_(d, d) {
  const double dc = 1.0 / std::sqrt(static_cast<double>(d));
  const double scale = std::sqrt(2.0 / d);
  for (int j = 0; j < d; ++j) basis_(0, j) = dc;
  int row = 1;
  for (int l = 1; l <= (d - 1) / 2; ++l, row += 2) {
    for (int j = 0; j < d; ++j) {
      // Reduce l*j mod d first so the angle stays small and exact.
      const double angle =
          2.0 * std::numbers::pi * static_cast<double>((l * j) % d) / d;
      basis_(row, j) = scale * std::cos(angle);
      basis_(row + 1, j) = scale * std::sin(angle);
    }
  }
  if (d % 2 == 0) {
    for (int j = 0; j < d; ++j) basis_(d - 1, j) = (j % 2 == 0) ? dc : -dc;
  }
}

PackedSpectrum OrthogonalDft::Forward(std::span<const double> x) const {
  return {ForwardPrefix(x, d_)};
}

std::vector<double> OrthogonalDft::ForwardPrefix(std::span<const double> x,
                                                 int m) const {
  std::vector<double> out(static_cast<size_t>(m), 0.0);
  for (int r = 0; r < m; ++r) {
    auto basis_row = basis_.row(r);
    double acc = 0.0;
    for (int j = 0; j < d_; ++j) acc += basis_row[j] * x[j];
    out[r] = acc;
  }
  return out;
}

std::vector<double> OrthogonalDft::Inverse(
    const PackedSpectrum& spectrum) const {
  std::vector<double> out(static_cast<size_t>(d_), 0.0);
  for (int r = 0; r < d_; ++r) {
    const double c = spectrum.coeffs[r];
    if (c == 0.0) continue;
    auto basis_row = basis_.row(r);
    for (int j = 0; j < d_; ++j) out[j] += c * basis_row[j];
  }
  return out;
}

Result<PackedSpectrum> TruncatePad(const PackedSpectrum& spectrum, int m) {
  SHUFFLESUM_RETURN_IF_ERROR(CheckM(m, spectrum.coeffs.size()));
  PackedSpectrum out = spectrum;
  std::fill(out.coeffs.begin() + m, out.coeffs.end(), 0.0);
  return out;
}

Result<double> ReconstructionEnergy(const PackedSpectrum& spectrum, int m) {
  SHUFFLESUM_RETURN_IF_ERROR(CheckM(m, spectrum.coeffs.size()));
  double energy = 0.0;
  for (size_t j = static_cast<size_t>(m); j < spectrum.coeffs.size(); ++j) {
    energy += spectrum.coeffs[j] * spectrum.coeffs[j];
  }
  return energy;
}

Result<double> RemapToUnit(double c) {
  constexpr double kSlack = 1e-12;
  if (!(c >= -1.0 - kSlack && c <= 1.0 + kSlack)) {
    return Error(ErrorCode::kDomainError,
                 "coefficient outside [-1,1]: " + std::to_string(c));
  }
  return (std::clamp(c, -1.0, 1.0) + 1.0) / 2.0;
}

double RemapFromUnit(double u) { return 2.0 * u - 1.0; }

Result<TransformPipeline> TransformPipeline::Create(
    const InputDataset& dataset, const ProtocolParams& params,
    const TransformOptions& options, TransformMode mode) {
  if (dataset.normalization() != Normalization::kL1) {
    return Error(ErrorCode::kNotNormalized,
                 "the transform pipeline needs L1-normalized input vectors");
  }
  if (static_cast<size_t>(params.d()) != dataset.d() ||
      static_cast<size_t>(params.n()) != dataset.n()) {
    return Error(ErrorCode::kBadDimension,
                 "params describe " + std::to_string(params.n()) + "x" +
                     std::to_string(params.d()) + " but the dataset is " +
                     std::to_string(dataset.n()) + "x" +
                     std::to_string(dataset.d()));
  }
  const int d = params.d();
  const int m = options.m;
  SHUFFLESUM_RETURN_IF_ERROR(CheckM(m, static_cast<size_t>(d)));
  SHUFFLESUM_ASSIGN_OR_RETURN(ProtocolParams inner, params.WithDimension(m));
  double gamma;
  if (options.gamma_override.has_value()) {
    gamma = *options.gamma_override;
  } else {
    SHUFFLESUM_ASSIGN_OR_RETURN(GammaChoice choice,
                                ComputeGamma(inner, options.formula));
    gamma = choice.gamma;
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(inner, inner.WithGamma(gamma));

  std::optional<OrthogonalDft> dft;
  if (mode == TransformMode::kFourier) dft.emplace(d);

  const Matrix& x = dataset.vectors();
  Matrix unit_inputs(x.rows(), static_cast<size_t>(m));
  std::vector<double> mean_prefix(static_cast<size_t>(m), 0.0);
  for (size_t i = 0; i < x.rows(); ++i) {
    std::vector<double> prefix;
    if (dft) {
      prefix = dft->ForwardPrefix(x.row(i), m);
    } else {
      auto r = x.row(i);
      prefix.assign(r.begin(), r.begin() + m);
    }
    auto out = unit_inputs.row(i);
    for (int j = 0; j < m; ++j) {
      SHUFFLESUM_ASSIGN_OR_RETURN(out[j], RemapToUnit(prefix[j]));
      mean_prefix[j] += prefix[j];
    }
  }
  for (double& v : mean_prefix) v /= static_cast<double>(x.rows());

  return TransformPipeline(mode, d, inner, std::move(unit_inputs),
                           std::move(mean_prefix), std::move(dft));
}

std::vector<double> TransformPipeline::Reconstruct(
    std::span<const double> prefix) const {
  PackedSpectrum padded{std::vector<double>(static_cast<size_t>(d_), 0.0)};
  std::copy(prefix.begin(), prefix.end(), padded.coeffs.begin());
  if (dft_) return dft_->Inverse(padded);
  return std::move(padded.coeffs);
}

Result<std::vector<double>> TransformPipeline::RunTrial(TrialSeed seed) const {
  SHUFFLESUM_ASSIGN_OR_RETURN(SumEstimate estimate,
                              RunProtocol(unit_inputs_, inner_, seed));
  std::vector<double> prefix(estimate.avg.size());
  std::transform(estimate.avg.begin(), estimate.avg.end(), prefix.begin(),
                 RemapFromUnit);
  return Reconstruct(prefix);
}

std::vector<double> TransformPipeline::NoiselessEstimate() const {
  return Reconstruct(mean_prefix_);
}

Result<std::vector<double>> FsaRun(const InputDataset& dataset,
                                   const ProtocolParams& params,
                                   const TransformOptions& options,
                                   TrialSeed seed) {
  SHUFFLESUM_ASSIGN_OR_RETURN(
      TransformPipeline pipeline,
      TransformPipeline::Create(dataset, params, options,
                                TransformMode::kFourier));
  return pipeline.RunTrial(seed);
}

Result<std::vector<double>> BaselineRun(const InputDataset& dataset,
                                        const ProtocolParams& params,
                                        const TransformOptions& options,
                                        TrialSeed seed) {
  SHUFFLESUM_ASSIGN_OR_RETURN(
      TransformPipeline pipeline,
      TransformPipeline::Create(dataset, params, options,
                                TransformMode::kIdentity));
  return pipeline.RunTrial(seed);
}

}  // namespace shufflesum

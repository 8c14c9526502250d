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

#ifndef SHUFFLESUM_EXPERIMENT_H_
#define SHUFFLESUM_EXPERIMENT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shufflesum/accountant.h"
#include "shufflesum/dataset.h"
#include "shufflesum/params.h"
#include "shufflesum/status.h"

namespace shufflesum {

enum class RunMode { kPlain, kFsa, kBaseline };
std::string_view RunModeName(RunMode mode);  // "plain", "fsa", "baseline"

// One point of an experiment: protocol parameters plus how to run them.
// `m` is set exactly when mode != kPlain. The gamma stored in `params` is
// ignored; the cell's formula (or override) decides it at run time.
struct ExperimentCell {
  ProtocolParams params;
  RunMode mode = RunMode::kPlain;
  std::optional<int> m;
  int trials = 10;
  uint64_t seed = 0;
  GammaFormula formula = GammaFormula::kTightT1;
  std::optional<double> gamma_override;

  std::string ToString() const;
};

Status ValidateCell(const ExperimentCell& cell);

// All errors are squared L2 distances between an estimated and the true
// average vector, averaged over trials (the normalized MSE). mse_total and
// mse_total_normalized therefore carry the same number.
struct ErrorReport {
  double mse_total = 0.0;
  double mse_perturbation = 0.0;
  double mse_reconstruction = 0.0;  // noiseless-path error; 0 for plain
  double mse_total_normalized = 0.0;
  double gamma_used = 0.0;  // gamma of the protocol actually executed
  int k_used = 0;
  double wall_time = 0.0;  // seconds
  std::vector<double> trial_errors;
};

// Runs cell.trials independent executions on `dataset`, spreading trials over
// `threads` workers. Results do not depend on `threads`. Errors carry the
// cell description in their message.
Result<ErrorReport> RunCell(const ExperimentCell& cell,
                            const InputDataset& dataset, int threads = 1);

enum class SweepAxis { kT, kK, kD, kEps, kN, kM };
std::string_view SweepAxisName(SweepAxis axis);
Result<SweepAxis> ParseSweepAxis(std::string_view name);

// True for the axes whose log-log slope is reported (d, eps, n).
bool AxisHasSlope(SweepAxis axis);

struct SweepSpec {
  SweepAxis vary = SweepAxis::kT;
  std::vector<double> values;
  ExperimentCell base;
};

struct SweepPoint {
  double value = 0.0;
  ExperimentCell cell;
  ErrorReport report;
};

struct SweepResult {
  SweepAxis vary = SweepAxis::kT;
  std::vector<SweepPoint> points;
  std::optional<double> slope;  // for d/eps/n sweeps
};

// Runs the base cell once per value. `features` is the unnormalized feature
// block the datasets are cut from: each cell uses its first n rows and first
// d columns, normalized as requested. Must be at least as large as every
// (n, d) in the sweep.
Result<SweepResult> Sweep(const SweepSpec& spec, const Matrix& features,
                          DataSource source, Normalization normalization,
                          int threads = 1);

// Ordinary least squares slope of log(y) against log(x). kDomainError if
// fewer than two points or any coordinate is not positive.
Result<double> LogLogSlope(const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace shufflesum

#endif  // SHUFFLESUM_EXPERIMENT_H_

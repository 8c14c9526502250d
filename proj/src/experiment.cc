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

#include "shufflesum/experiment.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <thread>
#include <utility>

#include "shufflesum/fourier.h"
#include "shufflesum/protocol.h"

namespace shufflesum {
namespace {

// Calls body(i) for i in [0, count) on up to `threads` workers. Each index
// runs exactly once; the caller stores results by index.
void ParallelFor(int count, int threads, const std::function<void(int)>& body) {
  const int workers = std::clamp(threads, 1, std::max(count, 1));
  if (workers == 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
        body(i);
      }
    });
  }
  for (std::thread& th : pool) th.join();
}

double SquaredDistance(const std::vector<double>& a,
                       const std::vector<double>& b) {
  double acc = 0.0;
  for (size_t j = 0; j < a.size(); ++j) {
    const double diff = a[j] - b[j];
    acc += diff * diff;
  }
  return acc;
}

Error InCell(const ExperimentCell& cell, const Error& error) {
  return Error(error.code(), "[" + cell.ToString() + "] " + error.message());
}

// Runs `trial(r)` for every trial and averages the squared errors in index
// order, so the sum is independent of scheduling.
Result<std::vector<double>> RunTrials(
    const ExperimentCell& cell, int threads, const std::vector<double>& truth,
    const std::function<Result<std::vector<double>>(int)>& trial) {
  std::vector<double> errors(static_cast<size_t>(cell.trials), 0.0);
  std::vector<std::optional<Error>> failures(static_cast<size_t>(cell.trials));
  ParallelFor(cell.trials, threads, [&](int r) {
    Result<std::vector<double>> estimate = trial(r);
    if (!estimate.ok()) {
      failures[r] = estimate.error();
      return;
    }
    errors[r] = SquaredDistance(*estimate, truth);
  });
  for (const auto& failure : failures) {
    if (failure) return *failure;
  }
  return errors;
}

double Mean(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc / static_cast<double>(v.size());
}

Result<int> IntegerValue(double v, SweepAxis axis) {
  if (!(std::abs(v - std::round(v)) < 1e-9) || std::abs(v) > 1e9) {
    return Error(ErrorCode::kInvalidArgument,
                 "sweep over " + std::string(SweepAxisName(axis)) +
                     " needs integer values");
  }
  return static_cast<int>(std::lround(v));
}

Result<ExperimentCell> CellAt(const ExperimentCell& base, SweepAxis axis,
                              double value) {
  const ProtocolParams& p = base.params;
  int d = p.d(), k = p.k(), t = p.t();
  int64_t n = p.n();
  double eps = p.epsilon();
  ExperimentCell cell = base;
  switch (axis) {
    case SweepAxis::kT: {
      SHUFFLESUM_ASSIGN_OR_RETURN(t, IntegerValue(value, axis));
      break;
    }
    case SweepAxis::kK: {
      SHUFFLESUM_ASSIGN_OR_RETURN(k, IntegerValue(value, axis));
      break;
    }
    case SweepAxis::kD: {
      SHUFFLESUM_ASSIGN_OR_RETURN(d, IntegerValue(value, axis));
      break;
    }
    case SweepAxis::kN: {
      SHUFFLESUM_ASSIGN_OR_RETURN(int nv, IntegerValue(value, axis));
      n = nv;
      break;
    }
    case SweepAxis::kEps:
      eps = value;
      break;
    case SweepAxis::kM: {
      if (base.mode == RunMode::kPlain) {
        return Error(ErrorCode::kInvalidArgument,
                     "an m sweep needs mode fsa or baseline");
      }
      SHUFFLESUM_ASSIGN_OR_RETURN(int m, IntegerValue(value, axis));
      cell.m = m;
      break;
    }
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(cell.params,
                              ValidateParams(d, k, n, t, eps, p.delta()));
  return cell;
}

}  // namespace

std::string_view RunModeName(RunMode mode) {
  switch (mode) {
    case RunMode::kPlain:
      return "plain";
    case RunMode::kFsa:
      return "fsa";
    case RunMode::kBaseline:
      return "baseline";
  }
  return "unknown";
}

std::string ExperimentCell::ToString() const {
  std::ostringstream out;
  out << "mode=" << RunModeName(mode) << " d=" << params.d()
      << " k=" << params.k() << " n=" << params.n() << " t=" << params.t()
      << " eps=" << params.epsilon() << " delta=" << params.delta();
  if (m) out << " m=" << *m;
  out << " trials=" << trials << " seed=" << seed
      << " gamma=" << GammaFormulaName(formula);
  if (gamma_override) out << "(override " << *gamma_override << ")";
  return out.str();
}

Status ValidateCell(const ExperimentCell& cell) {
  if (cell.trials < 1) {
    return Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  }
  if (cell.m.has_value() != (cell.mode != RunMode::kPlain)) {
    return Error(ErrorCode::kInvalidArgument,
                 "m must be given exactly for fsa and baseline modes");
  }
  return Status::Ok();
}

Result<ErrorReport> RunCell(const ExperimentCell& cell,
                            const InputDataset& dataset, int threads) {
  const auto start = std::chrono::steady_clock::now();
  if (Status s = ValidateCell(cell); !s.ok()) return InCell(cell, s.error());
  if (static_cast<size_t>(cell.params.d()) != dataset.d() ||
      static_cast<size_t>(cell.params.n()) != dataset.n()) {
    return InCell(cell, Error(ErrorCode::kBadDimension,
                              "dataset shape does not match the cell"));
  }
  const std::vector<double> truth = dataset.TrueAverage();
  ErrorReport report;
  report.k_used = cell.params.k();

  Result<std::vector<double>> errors = std::vector<double>{};
  if (cell.mode == RunMode::kPlain) {
    double gamma;
    if (cell.gamma_override) {
      gamma = *cell.gamma_override;
    } else {
      Result<GammaChoice> choice = ComputeGamma(cell.params, cell.formula);
      if (!choice.ok()) return InCell(cell, choice.error());
      gamma = choice->gamma;
    }
    Result<ProtocolParams> params = cell.params.WithGamma(gamma);
    if (!params.ok()) return InCell(cell, params.error());
    report.gamma_used = gamma;
    errors = RunTrials(cell, threads, truth,
                       [&](int r) -> Result<std::vector<double>> {
                         SHUFFLESUM_ASSIGN_OR_RETURN(
                             SumEstimate est,
                             RunProtocol(dataset.vectors(), *params,
                                         TrialSeed{cell.seed,
                                                   static_cast<uint64_t>(r)}));
                         return std::move(est.avg);
                       });
  } else {
    TransformOptions options{.m = *cell.m,
                             .formula = cell.formula,
                             .gamma_override = cell.gamma_override};
    Result<TransformPipeline> pipeline = TransformPipeline::Create(
        dataset, cell.params, options,
        cell.mode == RunMode::kFsa ? TransformMode::kFourier
                                   : TransformMode::kIdentity);
    if (!pipeline.ok()) return InCell(cell, pipeline.error());
    report.gamma_used = pipeline->inner_params().gamma();
    report.mse_reconstruction =
        SquaredDistance(pipeline->NoiselessEstimate(), truth);
    errors = RunTrials(cell, threads, truth, [&](int r) {
      return pipeline->RunTrial(TrialSeed{cell.seed, static_cast<uint64_t>(r)});
    });
  }
  if (!errors.ok()) return InCell(cell, errors.error());

  report.trial_errors = std::move(*errors);
  report.mse_total = Mean(report.trial_errors);
  report.mse_total_normalized = report.mse_total;
  report.mse_perturbation = report.mse_total - report.mse_reconstruction;
  report.wall_time = std::chrono::duration<double>(
                         std::chrono::steady_clock::now() - start)
                         .count();
  return report;
}

std::string_view SweepAxisName(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kT:
      return "t";
    case SweepAxis::kK:
      return "k";
    case SweepAxis::kD:
      return "d";
    case SweepAxis::kEps:
      return "eps";
    case SweepAxis::kN:
      return "n";
    case SweepAxis::kM:
      return "m";
  }
  return "unknown";
}

Result<SweepAxis> ParseSweepAxis(std::string_view name) {
  for (SweepAxis axis : {SweepAxis::kT, SweepAxis::kK, SweepAxis::kD,
                         SweepAxis::kEps, SweepAxis::kN, SweepAxis::kM}) {
    if (SweepAxisName(axis) == name) return axis;
  }
  return Error(ErrorCode::kInvalidArgument,
               "unknown sweep axis: " + std::string(name));
}

bool AxisHasSlope(SweepAxis axis) {
  return axis == SweepAxis::kD || axis == SweepAxis::kEps ||
         axis == SweepAxis::kN;
}

Result<SweepResult> Sweep(const SweepSpec& spec, const Matrix& features,
                          DataSource source, Normalization normalization,
                          int threads) {
  SweepResult result;
  result.vary = spec.vary;
  std::optional<InputDataset> dataset;
  for (double value : spec.values) {
    Result<ExperimentCell> cell = CellAt(spec.base, spec.vary, value);
    if (!cell.ok()) {
      return Error(cell.error().code(),
                   "[" + std::string(SweepAxisName(spec.vary)) + "=" +
                       std::to_string(value) + "] " + cell.error().message());
    }
    const size_t n = static_cast<size_t>(cell->params.n());
    const size_t d = static_cast<size_t>(cell->params.d());
    if (n > features.rows() || d > features.cols()) {
      return InCell(*cell, Error(ErrorCode::kInsufficientData,
                                 "dataset is smaller than the cell"));
    }
    if (!dataset || dataset->n() != n || dataset->d() != d) {
      Result<InputDataset> created = InputDataset::Create(
          features.Slice(n, d), source, normalization);
      if (!created.ok()) return InCell(*cell, created.error());
      dataset.emplace(std::move(*created));
    }
    SHUFFLESUM_ASSIGN_OR_RETURN(ErrorReport report,
                                RunCell(*cell, *dataset, threads));
    result.points.push_back(SweepPoint{value, *cell, std::move(report)});
  }
  if (AxisHasSlope(spec.vary)) {
    std::vector<double> x, y;
    for (const SweepPoint& p : result.points) {
      x.push_back(p.value);
      y.push_back(p.report.mse_total);
    }
    Result<double> slope = LogLogSlope(x, y);
    if (slope.ok()) result.slope = *slope;
  }
  return result;
}

Result<double> LogLogSlope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    return Error(ErrorCode::kDomainError, "need at least two points");
  }
  std::vector<double> lx, ly;
  for (size_t i = 0; i < x.size(); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) {
      return Error(ErrorCode::kDomainError, "log-log fit needs positive data");
    }
    lx.push_back(std::log(x[i]));
    ly.push_back(std::log(y[i]));
  }
  const double mx = Mean(lx), my = Mean(ly);
  double sxy = 0.0, sxx = 0.0;
  for (size_t i = 0; i < lx.size(); ++i) {
    sxy += (lx[i] - mx) * (ly[i] - my);
    sxx += (lx[i] - mx) * (lx[i] - mx);
  }
  if (sxx == 0.0) {
    return Error(ErrorCode::kDomainError, "x values are all equal");
  }
  return sxy / sxx;
}

}  // namespace shufflesum

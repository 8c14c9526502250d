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

// Acceptance checks. Prints one "criterion N: PASS|FAIL ..." line per
// criterion and exits nonzero if any selected criterion fails.
//
// Seeds are fixed to the CLI defaults (protocol seed 1, data seed 7) and were
// not chosen by looking at outcomes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "shufflesum/accountant.h"
#include "shufflesum/analyzer.h"
#include "shufflesum/csv.h"
#include "shufflesum/dataset.h"
#include "shufflesum/experiment.h"
#include "shufflesum/fourier.h"
#include "shufflesum/ingest.h"
#include "shufflesum/message.h"
#include "shufflesum/params.h"
#include "shufflesum/rng.h"
#include "shufflesum/shuffler.h"
#include "shufflesum/status.h"
#include "shufflesum/synth.h"

namespace shufflesum {
namespace {

constexpr uint64_t kProtocolSeed = 1;
constexpr uint64_t kDataSeed = 7;
constexpr int kDefaultD = 100;
constexpr int kDefaultK = 3;
constexpr int64_t kDefaultN = 50000;
constexpr int kDefaultT = 1;
constexpr double kDefaultEps = 0.95;
constexpr double kDefaultDelta = 0.5;
constexpr int kTrials = 10;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return buf;
}

std::string Join(const std::vector<double>& values, const char* format) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += " ";
    out += Fmt(format, values[i]);
  }
  return out;
}

Outcome Failed(const Error& error) { return {false, error.ToString()}; }

int Threads() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

class Context {
 public:
  explicit Context(std::filesystem::path workdir)
      : workdir_(std::move(workdir)) {}

  const std::filesystem::path& workdir() const { return workdir_; }

  // Heartbeat stand-in rows with the label column. Rows come from
  // independent per-row streams, so the first n rows do not depend on how
  // many are generated.
  const Matrix& Heartbeats(int n) {
    if (heartbeats_.rows() < static_cast<size_t>(n)) {
      heartbeats_ = HeartbeatRows(n, kDataSeed);
    }
    return heartbeats_;
  }

  // Heartbeat features after a round trip through a CSV file and the ingest
  // path. Cached across criteria.
  Result<Matrix> IngestedHeartbeats() {
    if (ingested_) return *ingested_;
    const std::filesystem::path path =
        workdir_ / "acceptance_heartbeats.csv";
    {
      std::ofstream out(path);
      SHUFFLESUM_RETURN_IF_ERROR(WriteLabeledCsv(
          HeartbeatRows(static_cast<int>(kDefaultN), kDataSeed), out));
    }
    Result<Matrix> rows = IngestFeatureRows(path.string(), kHeartbeatSamples,
                                            static_cast<int>(kDefaultN));
    std::filesystem::remove(path);
    if (rows.ok()) ingested_ = *rows;
    return rows;
  }

 private:
  std::filesystem::path workdir_;
  Matrix heartbeats_;
  std::optional<Matrix> ingested_;
};

Result<ExperimentCell> DefaultCell(RunMode mode, GammaFormula formula) {
  SHUFFLESUM_ASSIGN_OR_RETURN(
      ProtocolParams params,
      ValidateParams(kDefaultD, kDefaultK, kDefaultN, kDefaultT, kDefaultEps,
                     kDefaultDelta));
  ExperimentCell cell{.params = params,
                      .mode = mode,
                      .m = std::nullopt,
                      .trials = kTrials,
                      .seed = kProtocolSeed,
                      .formula = formula,
                      .gamma_override = std::nullopt};
  if (mode != RunMode::kPlain) cell.m = kDefaultD;
  return cell;
}

Result<SweepResult> DefaultSweep(SweepAxis axis, std::vector<double> values,
                                 RunMode mode, GammaFormula formula,
                                 const Matrix& features) {
  SHUFFLESUM_ASSIGN_OR_RETURN(ExperimentCell base, DefaultCell(mode, formula));
  const Normalization normalization =
      mode == RunMode::kPlain ? Normalization::kNone : Normalization::kL1;
  SweepSpec spec{.vary = axis, .values = std::move(values), .base = base};
  return Sweep(spec, features, DataSource::kEcg, normalization, Threads());
}

std::vector<double> Totals(const SweepResult& result) {
  std::vector<double> out;
  for (const SweepPoint& p : result.points) out.push_back(p.report.mse_total);
  return out;
}

double ArgminValue(const SweepResult& result) {
  const auto best = std::min_element(
      result.points.begin(), result.points.end(),
      [](const SweepPoint& a, const SweepPoint& b) {
        return a.report.mse_total < b.report.mse_total;
      });
  return best->value;
}

// Criterion 1. Every user's message is a (coordinate, bucket) pair, so the
// joint law of the two messages is a product of two small tables built here
// from the mechanism's definition. The library analyzer runs on every
// outcome and the weighted average of its output is compared with the truth.
Outcome ExactUnbiasedness(Context&) {
  constexpr int kD = 2;
  constexpr int kK = 1;
  constexpr double kGamma = 0.5;
  const std::vector<std::vector<double>> inputs = {{0.3, 0.7}, {0.6, 0.25}};
  const auto start = std::chrono::steady_clock::now();

  Result<ProtocolParams> base = ValidateParams(kD, kK, 2, 1, kDefaultEps,
                                               kDefaultDelta);
  if (!base.ok()) return Failed(base.error());
  Result<ProtocolParams> params = base->WithGamma(kGamma);
  if (!params.ok()) return Failed(params.error());

  using Table = std::map<std::pair<int, int>, double>;
  std::vector<Table> tables;
  for (const auto& x : inputs) {
    Table table;
    for (int coord = 0; coord < kD; ++coord) {
      const double scaled = x[coord] * kK;
      const int low = static_cast<int>(std::floor(scaled));
      const double frac = scaled - low;
      for (int q : {low, low + 1}) {
        const double pq = q == low ? 1.0 - frac : frac;
        if (pq == 0.0 || q > kK) continue;
        for (int b = 0; b <= kK; ++b) {
          const double pb = (b == q ? 1.0 - kGamma : 0.0) + kGamma / (kK + 1);
          table[{coord, b}] += (1.0 / kD) * pq * pb;
        }
      }
    }
    tables.push_back(std::move(table));
  }

  std::vector<double> expected(kD, 0.0);
  double total_mass = 0.0;
  for (const auto& [r0, p0] : tables[0]) {
    for (const auto& [r1, p1] : tables[1]) {
      std::vector<Message> messages = {
          Message{{Report{r0.first, r0.second}}},
          Message{{Report{r1.first, r1.second}}}};
      Result<Aggregation> agg = Aggregate(
          ShuffledBatch::Unshuffled(std::move(messages)), *params);
      if (!agg.ok()) return Failed(agg.error());
      Result<SumEstimate> est = Debias(*agg, *params);
      if (!est.ok()) return Failed(est.error());
      for (int j = 0; j < kD; ++j) expected[j] += p0 * p1 * est->avg[j];
      total_mass += p0 * p1;
    }
  }
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();

  double worst = std::abs(total_mass - 1.0);
  std::vector<double> truth(kD);
  for (int j = 0; j < kD; ++j) {
    truth[j] = (inputs[0][j] + inputs[1][j]) / 2.0;
    worst = std::max(worst, std::abs(expected[j] - truth[j]));
  }
  return {worst <= 1e-12 && seconds < 1.0,
          "E[avg]=(" + Join(expected, "%.15f") + ") truth=(" +
              Join(truth, "%.15f") + ") max_dev=" + Fmt("%.3g", worst) +
              " time=" + Fmt("%.3f", seconds) + "s"};
}

// Criterion 2. Defaults, tight formula, data through the CSV ingest path.
Outcome DefaultAccuracy(Context& ctx) {
  const auto start = std::chrono::steady_clock::now();
  Result<Matrix> features = ctx.IngestedHeartbeats();
  if (!features.ok()) return Failed(features.error());
  Result<InputDataset> dataset = InputDataset::Create(
      features->Slice(kDefaultN, kDefaultD), DataSource::kEcg,
      Normalization::kNone);
  if (!dataset.ok()) return Failed(dataset.error());
  Result<ExperimentCell> cell =
      DefaultCell(RunMode::kPlain, GammaFormula::kTightT1);
  if (!cell.ok()) return Failed(cell.error());
  Result<ErrorReport> report = RunCell(*cell, *dataset, Threads());
  if (!report.ok()) return Failed(report.error());
  const double seconds = std::chrono::duration<double>(
                             std::chrono::steady_clock::now() - start)
                             .count();
  return {report->mse_total_normalized < 0.5 && seconds < 120.0,
          "mse=" + Fmt("%.6g", report->mse_total_normalized) +
              " (target < 0.3, allowed < 0.5) gamma=" +
              Fmt("%.6g", report->gamma_used) +
              " time=" + Fmt("%.1f", seconds) + "s"};
}

// Criterion 3. Tight gamma where it applies (t = 1), general otherwise.
Outcome TOptimum(Context& ctx) {
  Result<SweepResult> sweep =
      DefaultSweep(SweepAxis::kT, {1, 2, 3, 4, 5}, RunMode::kPlain,
                   GammaFormula::kTightWhenT1, ctx.Heartbeats(kDefaultN));
  if (!sweep.ok()) return Failed(sweep.error());
  const double argmin = ArgminValue(*sweep);
  return {argmin == 1.0, "t=1..5 mse=" + Join(Totals(*sweep), "%.4g") +
                             " argmin t=" + Fmt("%g", argmin)};
}

// Criterion 4.
Outcome KOptimum(Context& ctx) {
  Result<SweepResult> sweep =
      DefaultSweep(SweepAxis::kK, {1, 2, 3, 4, 5, 6, 7}, RunMode::kPlain,
                   GammaFormula::kTightT1, ctx.Heartbeats(kDefaultN));
  if (!sweep.ok()) return Failed(sweep.error());
  const std::vector<double> totals = Totals(*sweep);
  const double argmin = ArgminValue(*sweep);
  const double best = *std::min_element(totals.begin(), totals.end());
  const double at_three = totals[2];
  const bool pass =
      at_three <= 1.15 * best && argmin >= 2.0 && argmin <= 4.0;
  return {pass, "k=1..7 mse=" + Join(totals, "%.4g") + " argmin k=" +
                    Fmt("%g", argmin) + " k3/min=" +
                    Fmt("%.4f", at_three / best)};
}

// Criterion 5. Three log-log slopes over 10-trial means.
Outcome ScalingExponents(Context& ctx) {
  const Matrix& features = ctx.Heartbeats(100000);
  struct Axis {
    const char* name;
    SweepAxis axis;
    std::vector<double> values;
    double lo;
    double hi;
  };
  const std::vector<Axis> axes = {
      {"d", SweepAxis::kD, {25, 50, 75, 100, 150}, 2.2, 3.1},
      {"eps", SweepAxis::kEps, {0.5, 0.6, 0.7, 0.8, 0.9, 0.95}, -2.0, -0.8},
      {"n", SweepAxis::kN, {10000, 20000, 50000, 100000}, -2.0, -1.0},
  };
  Outcome outcome{true, ""};
  for (const Axis& a : axes) {
    Result<SweepResult> sweep = DefaultSweep(
        a.axis, a.values, RunMode::kPlain, GammaFormula::kTightT1, features);
    if (!sweep.ok()) return Failed(sweep.error());
    const double slope = sweep->slope.value_or(NAN);
    const bool ok = slope >= a.lo && slope <= a.hi;
    outcome.pass = outcome.pass && ok;
    if (!outcome.detail.empty()) outcome.detail += "; ";
    outcome.detail += std::string(a.name) + " slope=" + Fmt("%.3f", slope) +
                      " band [" + Fmt("%g", a.lo) + "," + Fmt("%g", a.hi) +
                      "] " + (ok ? "ok" : "out") + " mse=" +
                      Join(Totals(*sweep), "%.4g");
  }
  return outcome;
}

// Criterion 6.
Outcome RegimeJump(Context& ctx) {
  Result<SweepResult> sweep =
      DefaultSweep(SweepAxis::kEps, {0.95, 1.0}, RunMode::kPlain,
                   GammaFormula::kTightT1, ctx.Heartbeats(kDefaultN));
  if (!sweep.ok()) return Failed(sweep.error());
  const std::vector<double> totals = Totals(*sweep);
  return {totals[1] > totals[0], "mse(eps=0.95)=" + Fmt("%.5g", totals[0]) +
                                     " mse(eps=1)=" + Fmt("%.5g", totals[1])};
}

// Criterion 7. Heartbeat data comes through the ingest path.
Outcome FsaVersusBaseline(Context& ctx) {
  Result<Matrix> features = ctx.IngestedHeartbeats();
  if (!features.ok()) return Failed(features.error());
  const std::vector<double> ms = {20, 55, 95};
  Result<SweepResult> fsa = DefaultSweep(
      SweepAxis::kM, ms, RunMode::kFsa, GammaFormula::kTightT1, *features);
  if (!fsa.ok()) return Failed(fsa.error());
  Result<SweepResult> baseline =
      DefaultSweep(SweepAxis::kM, ms, RunMode::kBaseline,
                   GammaFormula::kTightT1, *features);
  if (!baseline.ok()) return Failed(baseline.error());

  Outcome outcome{true, "ecg fsa/baseline:"};
  for (size_t i = 0; i < ms.size(); ++i) {
    const double ratio = fsa->points[i].report.mse_total /
                         baseline->points[i].report.mse_total;
    outcome.pass = outcome.pass && ratio <= 0.1;
    outcome.detail += " m=" + Fmt("%g", ms[i]) + " " +
                      Fmt("%.5g", fsa->points[i].report.mse_total) + "/" +
                      Fmt("%.5g", baseline->points[i].report.mse_total) +
                      " ratio=" + Fmt("%.3f", ratio);
  }

  std::vector<double> grid;
  for (int m = 5; m <= 95; m += 5) grid.push_back(m);
  const Matrix synthetic =
      SinusoidalRows(kDefaultD, static_cast<int>(kDefaultN), kDataSeed);
  Result<ExperimentCell> base =
      DefaultCell(RunMode::kFsa, GammaFormula::kTightT1);
  if (!base.ok()) return Failed(base.error());
  SweepSpec spec{.vary = SweepAxis::kM, .values = grid, .base = *base};
  Result<SweepResult> synth = Sweep(spec, synthetic, DataSource::kSynthetic,
                                    Normalization::kL1, Threads());
  if (!synth.ok()) return Failed(synth.error());
  const double argmin = ArgminValue(*synth);
  const bool synth_ok =
      argmin >= 0.6 * kDefaultD && argmin <= 0.95 * kDefaultD;
  outcome.pass = outcome.pass && synth_ok;
  outcome.detail += "; synthetic argmin m=" + Fmt("%g", argmin) +
                    " (band [60,95]) mse=" + Join(Totals(*synth), "%.3g");
  return outcome;
}

// Criterion 8.
Outcome PerturbationVersusM(Context& ctx) {
  Result<SweepResult> sweep =
      DefaultSweep(SweepAxis::kM, {5, 95}, RunMode::kFsa,
                   GammaFormula::kTightT1, ctx.Heartbeats(kDefaultN));
  if (!sweep.ok()) return Failed(sweep.error());
  const double low = sweep->points[0].report.mse_perturbation;
  const double high = sweep->points[1].report.mse_perturbation;
  const double ratio = high / low;
  return {ratio >= 100.0, "perturbation m=5 " + Fmt("%.5g", low) + " m=95 " +
                              Fmt("%.5g", high) + " ratio=" +
                              Fmt("%.1f", ratio)};
}

// Criterion 9.
Outcome PrivacyAuditGrid(Context&) {
  int feasible = 0;
  int pass_at_formula = 0;
  int flipped = 0;
  double worst_ratio = 0.0;
  for (int d : {10, 50, 100}) {
    for (int k : {1, 2, 3, 5}) {
      for (int64_t n : {10000, 50000, 100000}) {
        for (int t : {1, 2, 4}) {
          for (double eps : {0.5, 0.95, 2.0, 4.0}) {
            for (double delta : {0.5, 0.1, 1e-3, 1e-6}) {
              Result<ProtocolParams> params =
                  ValidateParams(d, k, n, t, eps, delta);
              if (!params.ok()) return Failed(params.error());
              Result<GammaChoice> gamma = GammaGeneral(*params);
              if (!gamma.ok()) continue;
              ++feasible;
              Result<AuditReport> at = PrivacyAudit(*params, gamma->gamma);
              Result<AuditReport> scaled =
                  PrivacyAudit(*params, gamma->gamma / 100.0);
              if (!at.ok()) return Failed(at.error());
              if (!scaled.ok()) return Failed(scaled.error());
              if (at->passes) ++pass_at_formula;
              if (!scaled->passes) ++flipped;
              worst_ratio = std::max(
                  worst_ratio,
                  std::exp(at->log_prob_bound - std::log(at->threshold)));
            }
          }
        }
      }
    }
  }
  const bool pass = feasible >= 50 && pass_at_formula == feasible &&
                    flipped >= 0.9 * feasible;
  return {pass, "feasible=" + std::to_string(feasible) +
                    " pass_at_formula=" + std::to_string(pass_at_formula) +
                    " worst prob/(delta/t)=" + Fmt("%.3g", worst_ratio) +
                    " fail_at_gamma/100=" + std::to_string(flipped)};
}

// Criterion 10. The reference matrix is written out from the definition of
// the packed basis rather than taken from the library.
Outcome TransformProperties(Context&) {
  double ortho = 0.0;
  double basis_diff = 0.0;
  for (int d : {2, 3, 4, 7, 16, 100}) {
    const OrthogonalDft dft(d);
    const Matrix& t = dft.basis();
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        double dot = 0.0;
        for (int j = 0; j < d; ++j) dot += t(r, j) * t(c, j);
        ortho = std::max(ortho, std::abs(dot - (r == c ? 1.0 : 0.0)));
      }
    }
    for (int r = 0; r < d; ++r) {
      for (int j = 0; j < d; ++j) {
        double ref;
        if (r == 0) {
          ref = 1.0 / std::sqrt(d);
        } else if (d % 2 == 0 && r == d - 1) {
          ref = (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(d);
        } else {
          const int l = (r + 1) / 2;
          const double angle = 2.0 * std::numbers::pi * l * j / d;
          ref = std::sqrt(2.0 / d) *
                (r % 2 == 1 ? std::cos(angle) : std::sin(angle));
        }
        basis_diff = std::max(basis_diff, std::abs(t(r, j) - ref));
      }
    }
  }

  double round_trip = 0.0;
  double plancherel = 0.0;
  double energy = 0.0;
  const std::vector<int> dims = {1, 2, 3, 7, 16, 100, 187};
  for (int trial = 0; trial < 1000; ++trial) {
    const int d = dims[trial % dims.size()];
    const OrthogonalDft dft(d);
    Rng rng(RngSpec{.master_seed = 10,
                    .stream_id = static_cast<uint64_t>(trial)});
    std::vector<double> x(d);
    for (double& v : x) v = 2.0 * rng.Uniform01() - 1.0;
    const PackedSpectrum spectrum = dft.Forward(x);
    const std::vector<double> back = dft.Inverse(spectrum);
    double nx = 0.0;
    double nc = 0.0;
    for (int j = 0; j < d; ++j) {
      round_trip = std::max(round_trip, std::abs(back[j] - x[j]));
      nx += x[j] * x[j];
      nc += spectrum.coeffs[j] * spectrum.coeffs[j];
    }
    plancherel = std::max(plancherel, std::abs(std::sqrt(nx) - std::sqrt(nc)));
    const int m = 1 + static_cast<int>(rng.UniformInt(d));
    Result<PackedSpectrum> cut = TruncatePad(spectrum, m);
    Result<double> re = ReconstructionEnergy(spectrum, m);
    if (!cut.ok()) return Failed(cut.error());
    if (!re.ok()) return Failed(re.error());
    const std::vector<double> approx = dft.Inverse(*cut);
    double direct = 0.0;
    for (int j = 0; j < d; ++j) {
      direct += (approx[j] - x[j]) * (approx[j] - x[j]);
    }
    energy = std::max(energy, std::abs(direct - *re));
  }
  const double worst =
      std::max({ortho, basis_diff, round_trip, plancherel, energy});
  return {worst <= 1e-9,
          "orthogonality=" + Fmt("%.2g", ortho) +
              " basis_vs_reference=" + Fmt("%.2g", basis_diff) +
              " round_trip=" + Fmt("%.2g", round_trip) +
              " plancherel=" + Fmt("%.2g", plancherel) +
              " energy_vs_subtraction=" + Fmt("%.2g", energy)};
}

// Criterion 11. A plain k sweep and an FSA m sweep rendered as CSV.
Result<std::string> DeterminismCsv(int threads) {
  SHUFFLESUM_ASSIGN_OR_RETURN(ProtocolParams params,
                              ValidateParams(20, 3, 5000, 1, 0.95, 0.5));
  ExperimentCell base{.params = params,
                      .mode = RunMode::kPlain,
                      .m = std::nullopt,
                      .trials = 4,
                      .seed = kProtocolSeed,
                      .formula = GammaFormula::kTightT1,
                      .gamma_override = std::nullopt};
  const Matrix features = SinusoidalRows(20, 5000, kDataSeed);
  std::vector<CsvRow> rows;
  SHUFFLESUM_ASSIGN_OR_RETURN(
      SweepResult plain,
      Sweep(SweepSpec{.vary = SweepAxis::kK, .values = {1, 2, 3}, .base = base},
            features, DataSource::kSynthetic, Normalization::kNone, threads));
  base.mode = RunMode::kFsa;
  base.m = 10;
  SHUFFLESUM_ASSIGN_OR_RETURN(
      SweepResult fsa,
      Sweep(SweepSpec{.vary = SweepAxis::kM,
                      .values = {5, 10, 20},
                      .base = base},
            features, DataSource::kSynthetic, Normalization::kL1, threads));
  for (const SweepResult* r : {&plain, &fsa}) {
    for (CsvRow& row : SweepRows(*r)) rows.push_back(std::move(row));
  }
  std::ostringstream out;
  WriteCsv(rows, out);
  return out.str();
}

Outcome Determinism(Context&) {
  Result<std::string> first = DeterminismCsv(1);
  Result<std::string> second = DeterminismCsv(1);
  Result<std::string> parallel = DeterminismCsv(8);
  if (!first.ok()) return Failed(first.error());
  if (!second.ok()) return Failed(second.error());
  if (!parallel.ok()) return Failed(parallel.error());
  const bool rerun = *first == *second;
  const bool threads = *first == *parallel;
  return {rerun && threads,
          std::string("rerun ") + (rerun ? "identical" : "differs") +
              ", 1 vs 8 threads " + (threads ? "identical" : "differs") +
              " (" + std::to_string(first->size()) + " bytes)"};
}

}  // namespace
}  // namespace shufflesum

int main(int argc, char** argv) {
  using shufflesum::Context;
  using shufflesum::Outcome;
  CLI::App app("Acceptance checks");
  int only = 0;
  std::string workdir = std::filesystem::temp_directory_path().string();
  app.add_option("--criterion", only, "run one criterion (1-11)")
      ->check(CLI::Range(1, 11));
  app.add_option("--workdir", workdir, "scratch directory for CSV files");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome(Context&)>> criteria = {
      shufflesum::ExactUnbiasedness, shufflesum::DefaultAccuracy,
      shufflesum::TOptimum,          shufflesum::KOptimum,
      shufflesum::ScalingExponents,  shufflesum::RegimeJump,
      shufflesum::FsaVersusBaseline, shufflesum::PerturbationVersusM,
      shufflesum::PrivacyAuditGrid,  shufflesum::TransformProperties,
      shufflesum::Determinism,
  };
  Context ctx(workdir);
  bool all_pass = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<size_t>(only) != i + 1) continue;
    const Outcome outcome = criteria[i](ctx);
    all_pass = all_pass && outcome.pass;
    std::printf("criterion %zu: %s %s\n", i + 1,
                outcome.pass ? "PASS" : "FAIL", outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}

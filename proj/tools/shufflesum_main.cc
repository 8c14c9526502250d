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

// Command-line front end: run one experiment cell, sweep a parameter, audit
// the accountant over a grid, or validate a dataset file.
//
// Exit codes: 0 success, 2 infeasible parameters, 3 data error, 1 usage.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "shufflesum/accountant.h"
#include "shufflesum/csv.h"
#include "shufflesum/dataset.h"
#include "shufflesum/experiment.h"
#include "shufflesum/ingest.h"
#include "shufflesum/params.h"
#include "shufflesum/status.h"
#include "shufflesum/synth.h"

namespace shufflesum {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitDataError = 3;

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDomainError:
    case ErrorCode::kBucketOutOfRange:
    case ErrorCode::kNotNormalized:
    case ErrorCode::kZeroRow:
    case ErrorCode::kFileNotFound:
    case ErrorCode::kMalformedRow:
    case ErrorCode::kInsufficientData:
      return kExitDataError;
    default:
      return kExitInfeasible;
  }
}

int Fail(const Error& error) {
  std::cerr << "error: " << error.ToString() << "\n";
  return ExitCodeFor(error.code());
}

struct CommonFlags {
  int d = 100;
  std::string k = "3";
  int64_t n = 50000;
  int t = 1;
  double eps = 0.95;
  double delta = 0.5;
  int m = 0;
  CLI::Option* m_option = nullptr;
  std::string mode = "plain";
  std::string dataset;
  bool synthetic = false;
  uint64_t data_seed = 7;
  int trials = 10;
  uint64_t seed = 1;
  std::string normalize = "auto";
  std::string gamma_formula = "tight";
  double gamma = 0.0;
  CLI::Option* gamma_option = nullptr;
  std::string out;
  int threads = 0;
};

void AddCommonFlags(CLI::App* app, CommonFlags& f) {
  app->add_option("--d", f.d, "Vector dimension")->capture_default_str();
  app->add_option("--k", f.k, "Quantization level, or 'auto'")
      ->capture_default_str();
  app->add_option("--n", f.n, "Number of users")->capture_default_str();
  app->add_option("--t", f.t, "Coordinates sampled per user")
      ->capture_default_str();
  app->add_option("--eps", f.eps, "Privacy epsilon")->capture_default_str();
  app->add_option("--delta", f.delta, "Privacy delta")->capture_default_str();
  f.m_option = app->add_option("--m", f.m,
                               "Coefficients kept (fsa/baseline modes)");
  app->add_option("--mode", f.mode, "plain | fsa | baseline")
      ->check(CLI::IsMember({"plain", "fsa", "baseline"}))
      ->capture_default_str();
  auto* dataset = app->add_option("--dataset", f.dataset,
                                  "Labeled CSV (last column is the label)");
  auto* synthetic =
      app->add_flag("--synthetic", f.synthetic, "Use the sinusoidal dataset");
  dataset->excludes(synthetic);
  app->add_option("--data-seed", f.data_seed, "Seed of the synthetic data")
      ->capture_default_str();
  app->add_option("--trials", f.trials, "Trials per cell")
      ->capture_default_str();
  app->add_option("--seed", f.seed, "Master seed")->capture_default_str();
  app->add_option("--normalize", f.normalize,
                  "l1 | none | auto (l1 for fsa/baseline, none for plain)")
      ->check(CLI::IsMember({"l1", "none", "auto"}))
      ->capture_default_str();
  app->add_option("--gamma-formula", f.gamma_formula,
                  "general | tight | auto (tight at t=1, else general)")
      ->check(CLI::IsMember({"general", "tight", "auto"}))
      ->capture_default_str();
  f.gamma_option = app->add_option(
      "--gamma", f.gamma,
      "Use this blanket probability instead of the formula");
  app->add_option("--out", f.out, "CSV output file (default: stdout)");
  app->add_option("--threads", f.threads, "Worker threads (0: all cores)")
      ->capture_default_str();
}

RunMode ModeOf(const CommonFlags& f) {
  if (f.mode == "fsa") return RunMode::kFsa;
  if (f.mode == "baseline") return RunMode::kBaseline;
  return RunMode::kPlain;
}

GammaFormula ParseFormula(const std::string& name) {
  if (name == "general") return GammaFormula::kGeneral;
  if (name == "auto") return GammaFormula::kTightWhenT1;
  return GammaFormula::kTightT1;
}

GammaFormula FormulaOf(const CommonFlags& f) {
  return ParseFormula(f.gamma_formula);
}

Normalization NormalizationOf(const CommonFlags& f) {
  if (f.normalize == "l1") return Normalization::kL1;
  if (f.normalize == "none") return Normalization::kNone;
  return ModeOf(f) == RunMode::kPlain ? Normalization::kNone
                                      : Normalization::kL1;
}

int Threads(const CommonFlags& f) {
  if (f.threads > 0) return f.threads;
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

Result<ExperimentCell> BaseCell(const CommonFlags& f) {
  int k = 1;
  const bool auto_k = f.k == "auto";
  if (!auto_k) {
    try {
      size_t used = 0;
      k = std::stoi(f.k, &used);
      if (used != f.k.size()) throw std::invalid_argument(f.k);
    } catch (const std::exception&) {
      return Error(ErrorCode::kInvalidArgument,
                   "--k must be an integer or 'auto', got " + f.k);
    }
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(
      ProtocolParams params,
      ValidateParams(f.d, k, f.n, f.t, f.eps, f.delta));
  if (auto_k) {
    SHUFFLESUM_ASSIGN_OR_RETURN(k, ChooseK(params, FormulaOf(f)));
    SHUFFLESUM_ASSIGN_OR_RETURN(
        params, ValidateParams(f.d, k, f.n, f.t, f.eps, f.delta));
  }
  ExperimentCell cell{.params = params,
                      .mode = ModeOf(f),
                      .m = std::nullopt,
                      .trials = f.trials,
                      .seed = f.seed,
                      .formula = FormulaOf(f),
                      .gamma_override = std::nullopt};
  if (f.m_option->count() > 0) cell.m = f.m;
  if (f.gamma_option->count() > 0) cell.gamma_override = f.gamma;
  SHUFFLESUM_RETURN_IF_ERROR(ValidateCell(cell));
  return cell;
}

Result<Matrix> LoadFeatures(const CommonFlags& f, int d, int64_t n) {
  if (!f.dataset.empty()) {
    return IngestFeatureRows(f.dataset, d, static_cast<int>(n));
  }
  if (f.synthetic) return SinusoidalRows(d, static_cast<int>(n), f.data_seed);
  return Error(ErrorCode::kInvalidArgument,
               "choose a data source: --dataset PATH or --synthetic");
}

DataSource SourceOf(const CommonFlags& f) {
  return f.dataset.empty() ? DataSource::kSynthetic : DataSource::kEcg;
}

int EmitCsv(const std::vector<CsvRow>& rows, const std::string& path) {
  if (path.empty()) {
    WriteCsv(rows, std::cout);
    return kExitOk;
  }
  std::ofstream out(path);
  WriteCsv(rows, out);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

int RunCommand(const CommonFlags& f) {
  Result<ExperimentCell> cell = BaseCell(f);
  if (!cell.ok()) return Fail(cell.error());
  Result<Matrix> features = LoadFeatures(f, f.d, f.n);
  if (!features.ok()) return Fail(features.error());
  Result<InputDataset> dataset = InputDataset::Create(
      std::move(*features), SourceOf(f), NormalizationOf(f));
  if (!dataset.ok()) return Fail(dataset.error());
  Result<ErrorReport> report = RunCell(*cell, *dataset, Threads(f));
  if (!report.ok()) return Fail(report.error());
  std::cerr << "wall time " << report->wall_time << " s\n";
  return EmitCsv({CsvRow{*cell, *report, std::nullopt}}, f.out);
}

int SweepCommand(const CommonFlags& f, const std::string& vary,
                 const std::vector<double>& values) {
  Result<SweepAxis> axis = ParseSweepAxis(vary);
  if (!axis.ok()) return Fail(axis.error());
  Result<ExperimentCell> base = BaseCell(f);
  if (!base.ok()) return Fail(base.error());
  int max_d = f.d;
  int64_t max_n = f.n;
  for (double v : values) {
    if (*axis == SweepAxis::kD) max_d = std::max(max_d, static_cast<int>(v));
    if (*axis == SweepAxis::kN) {
      max_n = std::max(max_n, static_cast<int64_t>(v));
    }
  }
  Result<Matrix> features = LoadFeatures(f, max_d, max_n);
  if (!features.ok()) return Fail(features.error());
  SweepSpec spec{.vary = *axis, .values = values, .base = *base};
  Result<SweepResult> result =
      Sweep(spec, *features, SourceOf(f), NormalizationOf(f), Threads(f));
  if (!result.ok()) return Fail(result.error());
  if (result->slope) std::cerr << "log-log slope " << *result->slope << "\n";
  return EmitCsv(SweepRows(*result), f.out);
}

struct AuditFlags {
  std::vector<int> d{10, 50, 100};
  std::vector<int> k{1, 2, 3, 5};
  std::vector<int64_t> n{10000, 50000, 100000};
  std::vector<int> t{1, 2, 4};
  std::vector<double> eps{0.5, 0.95, 2.0, 4.0};
  std::vector<double> delta{0.5, 0.1, 1e-3, 1e-6};
  double gamma_scale = 1.0;
  std::string gamma_formula = "general";
  std::string out;
};

int AuditCommand(const AuditFlags& f) {
  const GammaFormula formula = ParseFormula(f.gamma_formula);
  std::ofstream file;
  if (!f.out.empty()) file.open(f.out);
  std::ostream& out = f.out.empty() ? std::cout : file;
  out << "d,k,n,t,eps,delta,gamma,s,c,eps_prime,log_prob,prob,threshold,"
         "passes\n";
  int audited = 0, passed = 0, skipped = 0;
  char line[512];
  for (int d : f.d)
    for (int k : f.k)
      for (int64_t n : f.n)
        for (int t : f.t)
          for (double eps : f.eps)
            for (double delta : f.delta) {
              Result<ProtocolParams> params =
                  ValidateParams(d, k, n, t, eps, delta);
              if (!params.ok()) return Fail(params.error());
              Result<GammaChoice> choice = ComputeGamma(*params, formula);
              if (!choice.ok()) {
                // Infeasible (gamma > 1) or t > 1 under the tight formula.
                ++skipped;
                continue;
              }
              const double gamma = choice->gamma * f.gamma_scale;
              Result<AuditReport> audit = PrivacyAudit(*params, gamma);
              if (!audit.ok()) return Fail(audit.error());
              ++audited;
              passed += audit->passes ? 1 : 0;
              std::snprintf(line, sizeof(line),
                            "%d,%d,%lld,%d,%.9g,%.9g,%.9g,%lld,%.9g,%.9g,%.9g,"
                            "%.9g,%.9g,%d\n",
                            d, k, static_cast<long long>(n), t, eps, delta,
                            gamma, static_cast<long long>(audit->s), audit->c,
                            audit->epsilon_prime, audit->log_prob_bound,
                            audit->prob_bound, audit->threshold,
                            audit->passes ? 1 : 0);
              out << line;
            }
  std::cerr << "audited " << audited << " points, " << passed
            << " pass, " << skipped << " skipped as infeasible\n";
  return out ? kExitOk : kExitDataError;
}

int IngestCheckCommand(const std::string& path, int d, int64_t n) {
  Result<FileScan> scan = ScanEcgFile(path);
  if (!scan.ok()) return Fail(scan.error());
  std::cout << "rows " << scan->rows << "\ncolumns " << scan->min_columns
            << ".." << scan->max_columns << "\nfeature values outside [0,1] "
            << scan->out_of_range << "\n";
  if (d > 0 && scan->min_columns < static_cast<size_t>(d) + 1) {
    return Fail(Error(ErrorCode::kInsufficientData,
                      "some rows have fewer than d+1 columns"));
  }
  if (n > 0 && scan->rows < static_cast<size_t>(n)) {
    return Fail(Error(ErrorCode::kInsufficientData, "fewer than n rows"));
  }
  return kExitOk;
}

int SynthEcgCommand(int n, uint64_t seed, const std::string& path) {
  std::ofstream out(path);
  if (!out) return Fail(Error(ErrorCode::kFileNotFound, "cannot open " + path));
  Status s = WriteLabeledCsv(HeartbeatRows(n, seed), out);
  if (!s.ok()) return Fail(s.error());
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Shuffle-model private vector summation simulator"};
  app.require_subcommand(1);

  CommonFlags run_flags;
  CLI::App* run = app.add_subcommand("run", "Run one experiment cell");
  AddCommonFlags(run, run_flags);

  CommonFlags sweep_flags;
  std::string vary;
  std::vector<double> values;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep one parameter");
  AddCommonFlags(sweep, sweep_flags);
  sweep->add_option("--vary", vary, "t | k | d | eps | n | m")
      ->required()
      ->check(CLI::IsMember({"t", "k", "d", "eps", "n", "m"}));
  sweep->add_option("--values", values, "Comma-separated values")
      ->required()
      ->delimiter(',');

  AuditFlags audit_flags;
  CLI::App* audit =
      app.add_subcommand("audit", "Exact-binomial privacy audit over a grid");
  audit->add_option("--d", audit_flags.d)->delimiter(',');
  audit->add_option("--k", audit_flags.k)->delimiter(',');
  audit->add_option("--n", audit_flags.n)->delimiter(',');
  audit->add_option("--t", audit_flags.t)->delimiter(',');
  audit->add_option("--eps", audit_flags.eps)->delimiter(',');
  audit->add_option("--delta", audit_flags.delta)->delimiter(',');
  audit->add_option("--gamma-scale", audit_flags.gamma_scale,
                    "Multiply the accountant's gamma before auditing")
      ->capture_default_str();
  audit->add_option("--gamma-formula", audit_flags.gamma_formula)
      ->check(CLI::IsMember({"general", "tight", "auto"}))
      ->capture_default_str();
  audit->add_option("--out", audit_flags.out, "CSV output file");

  std::string ingest_path;
  int ingest_d = 0;
  int64_t ingest_n = 0;
  CLI::App* ingest = app.add_subcommand("ingest", "Validate a dataset file");
  ingest->add_option("--check", ingest_path, "Labeled CSV to validate")
      ->required();
  ingest->add_option("--d", ingest_d, "Required feature columns");
  ingest->add_option("--n", ingest_n, "Required rows");

  int synth_n = 50000;
  uint64_t synth_seed = 7;
  std::string synth_out;
  CLI::App* synth = app.add_subcommand(
      "synth-ecg", "Write the heartbeat-shaped stand-in dataset as CSV");
  synth->add_option("--n", synth_n)->capture_default_str();
  synth->add_option("--seed", synth_seed)->capture_default_str();
  synth->add_option("--out", synth_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*run) return RunCommand(run_flags);
  if (*sweep) return SweepCommand(sweep_flags, vary, values);
  if (*audit) return AuditCommand(audit_flags);
  if (*ingest) return IngestCheckCommand(ingest_path, ingest_d, ingest_n);
  if (*synth) return SynthEcgCommand(synth_n, synth_seed, synth_out);
  return kExitUsage;
}

}  // namespace
}  // namespace shufflesum

int main(int argc, char** argv) { return shufflesum::Main(argc, argv); }

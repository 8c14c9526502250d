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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "shufflesum/csv.h"
#include "shufflesum/experiment.h"
#include "shufflesum/rng.h"
#include "shufflesum/synth.h"

namespace shufflesum {
namespace {

ExperimentCell Cell(int d, int k, int64_t n, int t, double eps = 0.95,
                    RunMode mode = RunMode::kPlain,
                    std::optional<int> m = std::nullopt) {
  return ExperimentCell{.params = *ValidateParams(d, k, n, t, eps, 0.5),
                        .mode = mode,
                        .m = m,
                        .trials = 4,
                        .seed = 11,
                        .formula = GammaFormula::kTightWhenT1,
                        .gamma_override = std::nullopt};
}

InputDataset Data(int n, int d, Normalization norm) {
  return *InputDataset::Create(SinusoidalRows(d, n, 3), DataSource::kSynthetic,
                               norm);
}

TEST(ValidateCellTest, ChecksInvariants) {
  ExperimentCell c = Cell(10, 3, 100, 1);
  EXPECT_TRUE(ValidateCell(c).ok());
  c.trials = 0;
  EXPECT_EQ(ValidateCell(c).error().code(), ErrorCode::kInvalidArgument);
  c = Cell(10, 3, 100, 1);
  c.m = 3;
  EXPECT_FALSE(ValidateCell(c).ok());
  c = Cell(10, 3, 100, 1, 0.95, RunMode::kFsa);
  EXPECT_FALSE(ValidateCell(c).ok());
}

TEST(RunCellTest, NoiselessLimit) {
  const int n = 500, d = 10;
  ExperimentCell c = Cell(d, 1000000, n, d);
  c.gamma_override = 0.0;
  Result<ErrorReport> r = RunCell(c, Data(n, d, Normalization::kNone));
  ASSERT_TRUE(r.ok()) << r.error().ToString();
  EXPECT_LT(r->mse_total, 1e-6);
  EXPECT_EQ(r->mse_reconstruction, 0.0);
  EXPECT_EQ(r->mse_total_normalized, r->mse_total);
  EXPECT_EQ(r->gamma_used, 0.0);
  EXPECT_EQ(r->k_used, 1000000);
  EXPECT_EQ(r->trial_errors.size(), 4u);
}

TEST(RunCellTest, ThreadCountDoesNotChangeResults) {
  const int n = 20000, d = 20;
  const InputDataset ds = Data(n, d, Normalization::kL1);
  for (RunMode mode : {RunMode::kPlain, RunMode::kFsa, RunMode::kBaseline}) {
    ExperimentCell c =
        Cell(d, 3, n, 1, 0.95, mode,
             mode == RunMode::kPlain ? std::nullopt : std::optional<int>(8));
    c.trials = 6;
    ErrorReport one = *RunCell(c, ds, 1);
    ErrorReport many = *RunCell(c, ds, 4);
    EXPECT_EQ(one.trial_errors, many.trial_errors);
    EXPECT_EQ(one.mse_total, many.mse_total);
  }
}

TEST(RunCellTest, InfeasibleGammaNamesTheCell) {
  const InputDataset ds = Data(100, 50, Normalization::kNone);
  Result<ErrorReport> r = RunCell(Cell(50, 3, 100, 1), ds);
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.error().code(), ErrorCode::kInfeasibleGamma);
  EXPECT_NE(r.error().message().find("mode=plain d=50 k=3 n=100"),
            std::string::npos)
      << r.error().message();
}

TEST(RunCellTest, ShapeMismatch) {
  EXPECT_EQ(RunCell(Cell(10, 3, 100, 1), Data(100, 9, Normalization::kNone))
                .error()
                .code(),
            ErrorCode::kBadDimension);
}

TEST(RunCellTest, TransformErrorDecomposition) {
  const int n = 20000, d = 40;
  const InputDataset ds = Data(n, d, Normalization::kL1);
  std::optional<double> recon;
  for (int t : {1, 2, 3}) {
    for (int k : {2, 3, 5}) {
      for (RunMode mode : {RunMode::kFsa, RunMode::kBaseline}) {
        ExperimentCell c = Cell(d, k, n, t, 0.95, mode, 10);
        c.trials = 10;
        ErrorReport r = *RunCell(c, ds);
        EXPECT_GE(r.mse_total, r.mse_reconstruction);
        EXPECT_NEAR(r.mse_perturbation, r.mse_total - r.mse_reconstruction,
                    1e-18);
        if (mode == RunMode::kFsa) {
          // Reconstruction depends on m only.
          if (!recon) recon = r.mse_reconstruction;
          EXPECT_EQ(r.mse_reconstruction, *recon);
        }
      }
    }
  }
}

TEST(LogLogSlopeTest, RecoversPowerLaw) {
  std::vector<double> x = {1, 2, 4, 8, 16}, y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -1.5));
  EXPECT_NEAR(*LogLogSlope(x, y), -1.5, 1e-12);
  EXPECT_FALSE(LogLogSlope({1.0}, {1.0}).ok());
  EXPECT_FALSE(LogLogSlope({1.0, 2.0}, {1.0, 0.0}).ok());
  EXPECT_FALSE(LogLogSlope({2.0, 2.0}, {1.0, 3.0}).ok());
}

TEST(SweepTest, OrderedPointsAndSlope) {
  const Matrix features = SinusoidalRows(40, 20000, 5);
  SweepSpec spec{.vary = SweepAxis::kD,
                 .values = {10, 20, 40},
                 .base = Cell(40, 3, 20000, 1)};
  Result<SweepResult> r =
      Sweep(spec, features, DataSource::kSynthetic, Normalization::kNone);
  ASSERT_TRUE(r.ok()) << r.error().ToString();
  ASSERT_EQ(r->points.size(), 3u);
  EXPECT_EQ(r->points[1].cell.params.d(), 20);
  ASSERT_TRUE(r->slope.has_value());
  EXPECT_GT(*r->slope, 0.0);

  spec.vary = SweepAxis::kT;
  spec.values = {1, 2};
  r = Sweep(spec, features, DataSource::kSynthetic, Normalization::kNone);
  ASSERT_TRUE(r.ok());
  EXPECT_FALSE(r->slope.has_value());
  EXPECT_EQ(r->points[1].cell.params.t(), 2);
}

TEST(SweepTest, Errors) {
  const Matrix features = SinusoidalRows(20, 1000, 5);
  SweepSpec spec{.vary = SweepAxis::kM,
                 .values = {5},
                 .base = Cell(20, 3, 1000, 1)};
  EXPECT_EQ(Sweep(spec, features, DataSource::kSynthetic, Normalization::kNone)
                .error()
                .code(),
            ErrorCode::kInvalidArgument);
  spec.vary = SweepAxis::kD;
  spec.values = {40};
  EXPECT_EQ(Sweep(spec, features, DataSource::kSynthetic, Normalization::kNone)
                .error()
                .code(),
            ErrorCode::kInsufficientData);
  spec.values = {2.5};
  EXPECT_EQ(Sweep(spec, features, DataSource::kSynthetic, Normalization::kNone)
                .error()
                .code(),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(*ParseSweepAxis("eps"), SweepAxis::kEps);
  EXPECT_FALSE(ParseSweepAxis("q").ok());
}

TEST(CsvTest, RowFormat) {
  ExperimentCell c = Cell(100, 3, 50000, 1);
  ErrorReport r;
  r.gamma_used = 0.17052972638;
  r.mse_total = 1.0 / 3.0;
  r.mse_perturbation = 1.0 / 3.0;
  EXPECT_EQ(FormatCsvRow({c, r, std::nullopt}),
            "plain,100,3,50000,1,0.95,0.5,,0.170529726,4,0.333333333,"
            "0.333333333,0,");
  c.mode = RunMode::kFsa;
  c.m = 20;
  EXPECT_EQ(FormatCsvRow({c, r, 2.5}),
            "fsa,100,3,50000,1,0.95,0.5,20,0.170529726,4,0.333333333,"
            "0.333333333,0,2.5");
  std::ostringstream out;
  WriteCsv({}, out);
  EXPECT_EQ(out.str(),
            "mode,d,k,n,t,eps,delta,m,gamma,trials,mse_total,"
            "mse_perturbation,mse_reconstruction,fit_slope\n");
}

TEST(CsvTest, RerunsAreByteIdentical) {
  const Matrix features = SinusoidalRows(20, 5000, 5);
  SweepSpec spec{.vary = SweepAxis::kEps,
                 .values = {0.5, 0.7, 0.9},
                 .base = Cell(20, 3, 5000, 1)};
  std::string runs[2];
  for (int i = 0; i < 2; ++i) {
    std::ostringstream out;
    WriteCsv(SweepRows(*Sweep(spec, features, DataSource::kSynthetic,
                              Normalization::kNone, 1 + 3 * i)),
             out);
    runs[i] = out.str();
  }
  EXPECT_EQ(runs[0], runs[1]);
}

}  // namespace
}  // namespace shufflesum

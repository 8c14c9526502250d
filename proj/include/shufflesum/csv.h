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

#ifndef SHUFFLESUM_CSV_H_
#define SHUFFLESUM_CSV_H_

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "shufflesum/experiment.h"

namespace shufflesum {

inline constexpr char kCsvHeader[] =
    "mode,d,k,n,t,eps,delta,m,gamma,trials,mse_total,mse_perturbation,"
    "mse_reconstruction,fit_slope";

// One output line: a cell, its report, and the sweep slope if any.
struct CsvRow {
  ExperimentCell cell;
  ErrorReport report;
  std::optional<double> fit_slope;
};

// Formats one row (no trailing newline). Reals use 9 significant digits;
// m and fit_slope are left empty when absent. Wall time is deliberately not
// written so reruns are byte-identical.
std::string FormatCsvRow(const CsvRow& row);

// Header plus one line per row.
void WriteCsv(const std::vector<CsvRow>& rows, std::ostream& out);

// Rows of a sweep; every row carries the sweep's slope when it has one.
std::vector<CsvRow> SweepRows(const SweepResult& result);

}  // namespace shufflesum

#endif  // SHUFFLESUM_CSV_H_

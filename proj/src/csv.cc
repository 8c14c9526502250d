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

#include "shufflesum/csv.h"

#include <cstdio>

namespace shufflesum {
namespace {

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace

std::string FormatCsvRow(const CsvRow& row) {
  const ProtocolParams& p = row.cell.params;
  std::string out;
  out += RunModeName(row.cell.mode);
  out += ',' + std::to_string(p.d());
  out += ',' + std::to_string(p.k());
  out += ',' + std::to_string(p.n());
  out += ',' + std::to_string(p.t());
  out += ',' + Real(p.epsilon());
  out += ',' + Real(p.delta());
  out += ',' + (row.cell.m ? std::to_string(*row.cell.m) : std::string());
  out += ',' + Real(row.report.gamma_used);
  out += ',' + std::to_string(row.cell.trials);
  out += ',' + Real(row.report.mse_total);
  out += ',' + Real(row.report.mse_perturbation);
  out += ',' + Real(row.report.mse_reconstruction);
  out += ',' + (row.fit_slope ? Real(*row.fit_slope) : std::string());
  return out;
}

void WriteCsv(const std::vector<CsvRow>& rows, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const CsvRow& row : rows) out << FormatCsvRow(row) << '\n';
}

std::vector<CsvRow> SweepRows(const SweepResult& result) {
  std::vector<CsvRow> rows;
  rows.reserve(result.points.size());
  for (const SweepPoint& point : result.points) {
    rows.push_back(CsvRow{point.cell, point.report, result.slope});
  }
  return rows;
}

}  // namespace shufflesum

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

#include "shufflesum/ingest.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <string_view>
#include <system_error>
#include <vector>

namespace shufflesum {
namespace {

std::string_view Trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const size_t begin = s.find_first_not_of(kSpace);
  if (begin == std::string_view::npos) return {};
  const size_t end = s.find_last_not_of(kSpace);
  return s.substr(begin, end - begin + 1);
}

// Splits on commas and parses every field. False on any bad field.
bool ParseRow(std::string_view line, std::vector<double>& fields) {
  fields.clear();
  while (true) {
    const size_t comma = line.find(',');
    std::string_view field = Trim(line.substr(0, comma));
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() ||
        ptr != field.data() + field.size()) {
      return false;
    }
    fields.push_back(value);
    if (comma == std::string_view::npos) return true;
    line.remove_prefix(comma + 1);
  }
}

bool IsBlank(std::string_view line) { return Trim(line).empty(); }

Error MalformedAt(const std::string& path, size_t line_number) {
  return Error(ErrorCode::kMalformedRow,
               path + ": malformed row at line " + std::to_string(line_number));
}

Result<std::ifstream> Open(const std::string& path) {
  std::ifstream in(path);
  if (!in) return Error(ErrorCode::kFileNotFound, "cannot open " + path);
  return in;
}

}  // namespace

Result<Matrix> IngestFeatureRows(const std::string& path, int d, int n) {
  if (d < 1 || n < 1) {
    return Error(ErrorCode::kBadDimension, "d and n must be positive");
  }
  SHUFFLESUM_ASSIGN_OR_RETURN(std::ifstream in, Open(path));
  Matrix out(static_cast<size_t>(n), static_cast<size_t>(d));
  std::string line;
  std::vector<double> fields;
  size_t line_number = 0;
  size_t rows = 0;
  while (rows < static_cast<size_t>(n) && std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    if (!ParseRow(line, fields)) return MalformedAt(path, line_number);
    if (fields.size() < static_cast<size_t>(d) + 1) {
      return Error(ErrorCode::kInsufficientData,
                   path + ": line " + std::to_string(line_number) + " has " +
                       std::to_string(fields.size()) + " columns, need " +
                       std::to_string(d + 1));
    }
    auto row = out.row(rows++);
    for (int j = 0; j < d; ++j) row[j] = std::clamp(fields[j], 0.0, 1.0);
  }
  if (rows < static_cast<size_t>(n)) {
    return Error(ErrorCode::kInsufficientData,
                 path + ": " + std::to_string(rows) + " rows, need " +
                     std::to_string(n));
  }
  return out;
}

Result<InputDataset> IngestEcg(const std::string& path, int d, int n,
                               Normalization normalization) {
  SHUFFLESUM_ASSIGN_OR_RETURN(Matrix rows, IngestFeatureRows(path, d, n));
  return InputDataset::Create(std::move(rows), DataSource::kEcg,
                              normalization);
}

Result<FileScan> ScanEcgFile(const std::string& path) {
  SHUFFLESUM_ASSIGN_OR_RETURN(std::ifstream in, Open(path));
  FileScan scan;
  std::string line;
  std::vector<double> fields;
  size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (IsBlank(line)) continue;
    if (!ParseRow(line, fields)) return MalformedAt(path, line_number);
    const size_t cols = fields.size();
    scan.min_columns = scan.rows == 0 ? cols : std::min(scan.min_columns, cols);
    scan.max_columns = std::max(scan.max_columns, cols);
    ++scan.rows;
    for (size_t j = 0; j + 1 < cols; ++j) {
      if (fields[j] < 0.0 || fields[j] > 1.0) ++scan.out_of_range;
    }
  }
  return scan;
}

Status WriteLabeledCsv(const Matrix& rows, std::ostream& out) {
  char buf[32];
  for (size_t i = 0; i < rows.rows(); ++i) {
    auto row = rows.row(i);
    for (size_t j = 0; j < row.size(); ++j) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[j]);
      if (j > 0) out << ',';
      out << buf;
    }
    out << '\n';
  }
  if (!out) return Error(ErrorCode::kInvalidArgument, "write failed");
  return Status::Ok();
}

}  // namespace shufflesum

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

#ifndef SHUFFLESUM_INGEST_H_
#define SHUFFLESUM_INGEST_H_

#include <cstddef>
#include <iosfwd>
#include <string>

#include "shufflesum/dataset.h"
#include "shufflesum/status.h"

namespace shufflesum {

// Loads a labeled CSV (comma-separated reals, last column is a class label,
// no header). Keeps the first `d` feature columns of the first `n` rows,
// clamps them to [0,1] and applies `normalization`.
//
// Errors: kFileNotFound; kMalformedRow naming the 1-based line of the first
// unparsable row; kInsufficientData when the file has fewer than n rows or a
// row has fewer than d+1 columns.
Result<InputDataset> IngestEcg(const std::string& path, int d, int n,
                               Normalization normalization);

// Same contract as IngestEcg, but returns the clamped feature block before
// normalization so callers can re-slice it for sweeps.
Result<Matrix> IngestFeatureRows(const std::string& path, int d, int n);

// Whole-file summary for `ingest --check`.
struct FileScan {
  size_t rows = 0;
  size_t min_columns = 0;
  size_t max_columns = 0;
  size_t out_of_range = 0;  // feature values outside [0,1] before clamping
};

// Parses every row. Fails on the first malformed row.
Result<FileScan> ScanEcgFile(const std::string& path);

// Writes rows (features plus label as the last column) in the format
// IngestEcg reads, with 17 significant digits so values round-trip.
Status WriteLabeledCsv(const Matrix& rows, std::ostream& out);

}  // namespace shufflesum

#endif  // SHUFFLESUM_INGEST_H_

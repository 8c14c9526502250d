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

#include "shufflesum/dataset.h"

#include <algorithm>
#include <string>
#include <utility>

namespace shufflesum {

Matrix Matrix::Slice(size_t rows, size_t cols) const {
  rows = std::min(rows, rows_);
  cols = std::min(cols, cols_);
  Matrix out(rows, cols);
  for (size_t i = 0; i < rows; ++i) {
    auto src = row(i);
    std::copy(src.begin(), src.begin() + cols, out.row(i).begin());
  }
  return out;
}

std::vector<double> Matrix::ColumnMeans() const {
  std::vector<double> means(cols_, 0.0);
  for (size_t i = 0; i < rows_; ++i) {
    auto r = row(i);
    for (size_t j = 0; j < cols_; ++j) means[j] += r[j];
  }
  if (rows_ > 0) {
    for (double& m : means) m /= static_cast<double>(rows_);
  }
  return means;
}

Result<InputDataset> InputDataset::Create(Matrix vectors, DataSource source,
                                          Normalization normalization) {
  if (vectors.rows() == 0 || vectors.cols() == 0) {
    return Error(ErrorCode::kInsufficientData, "dataset is empty");
  }
  for (size_t i = 0; i < vectors.rows(); ++i) {
    for (double v : vectors.row(i)) {
      if (!(v >= 0.0 && v <= 1.0)) {
        return Error(ErrorCode::kDomainError,
                     "entry outside [0,1] in row " + std::to_string(i));
      }
    }
  }
  if (normalization == Normalization::kL1) {
    for (size_t i = 0; i < vectors.rows(); ++i) {
      auto r = vectors.row(i);
      double sum = 0.0;
      for (double v : r) sum += v;
      if (sum == 0.0) {
        return Error(ErrorCode::kZeroRow,
                     "row " + std::to_string(i) +
                         " is all zero; L1 normalization is undefined");
      }
      for (double& v : r) v /= sum;
    }
  }
  return InputDataset(std::move(vectors), source, normalization);
}

}  // namespace shufflesum

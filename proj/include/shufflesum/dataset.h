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

#ifndef SHUFFLESUM_DATASET_H_
#define SHUFFLESUM_DATASET_H_

#include <cstddef>
#include <span>
#include <vector>

#include "shufflesum/status.h"

namespace shufflesum {

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

  std::span<const double> row(size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(size_t i) { return {data_.data() + i * cols_, cols_}; }

  double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }

  // Top-left rows x cols block. Both must not exceed the current shape.
  Matrix Slice(size_t rows, size_t cols) const;

  std::vector<double> ColumnMeans() const;

  bool operator==(const Matrix&) const = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<double> data_;
};

enum class DataSource { kEcg, kSynthetic, kCustom };
enum class Normalization { kNone, kL1 };

// n user vectors in [0,1]^d. With kL1 every row sums to 1.
class InputDataset {
 public:
  // Validates entries (must lie in [0,1]) and applies the requested
  // normalization. All-zero rows are rejected under kL1.
  static Result<InputDataset> Create(Matrix vectors, DataSource source,
                                     Normalization normalization);

  const Matrix& vectors() const { return vectors_; }
  DataSource source() const { return source_; }
  Normalization normalization() const { return normalization_; }
  size_t n() const { return vectors_.rows(); }
  size_t d() const { return vectors_.cols(); }

  // (1/n) * sum of rows: the quantity the protocol estimates.
  std::vector<double> TrueAverage() const { return vectors_.ColumnMeans(); }

 private:
  InputDataset(Matrix vectors, DataSource source, Normalization normalization)
      : vectors_(std::move(vectors)),
        source_(source),
        normalization_(normalization) {}

  Matrix vectors_;
  DataSource source_;
  Normalization normalization_;
};

}  // namespace shufflesum

#endif  // SHUFFLESUM_DATASET_H_

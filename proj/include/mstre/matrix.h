// mstre/matrix.h

// Copyright 2026  The mstrenet authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSTRE_MATRIX_H_
#define MSTRE_MATRIX_H_

#include <cstddef>
#include <random>
#include <vector>

namespace mstre {

// Build-wide element type. All numeric kernels and training run in 64-bit;
// checkpoints store 32-bit floats.
using Real = double;

/// Dense row-major matrix. Plain storage, no expression templates; the
/// kernels in kernels.h do the actual math.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, Real value = 0.0)
      : rows_(rows), cols_(cols),
        data_(static_cast<size_t>(rows) * cols, value) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  Real& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  Real operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  Real* row_data(int r) { return data_.data() + static_cast<size_t>(r) * cols_; }
  const Real* row_data(int r) const { return data_.data() + static_cast<size_t>(r) * cols_; }

  std::vector<Real>& data() { return data_; }
  const std::vector<Real>& data() const { return data_; }

  void set_zero() { std::fill(data_.begin(), data_.end(), 0.0); }

  bool operator==(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
  }

 private:
  int rows_, cols_;
  std::vector<Real> data_;
};

using Vector = std::vector<Real>;

Matrix transpose(const Matrix& m);

/// c = a * b (throws DataError on inner-dimension mismatch, message names
/// the expected/actual shapes).
Matrix matmul(const Matrix& a, const Matrix& b);

/// a += scale * b, shapes must match.
void add_scaled(Matrix& a, const Matrix& b, Real scale = 1.0);
void add_scaled(Vector& a, const Vector& b, Real scale = 1.0);

Real frobenius_norm(const Matrix& m);
Real dot(const Vector& a, const Vector& b);

bool all_finite(const Matrix& m);

/// Fills with uniform(-a, a), a = sqrt(6 / (fan_in + fan_out)). Consumes the
/// generator in row-major order so builds are reproducible.
void glorot_init(Matrix& m, int fan_in, int fan_out, std::mt19937& rng);

}  // namespace mstre

#endif  // MSTRE_MATRIX_H_

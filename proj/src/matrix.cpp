// src/matrix.cpp

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

#include "mstre/matrix.h"

#include <cmath>
#include <string>

#include "mstre/errors.h"

namespace mstre {

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DataError("matmul shape mismatch: expected inner dim " +
                    std::to_string(a.cols()) + ", got " +
                    std::to_string(b.rows()) + " (" + std::to_string(a.rows()) +
                    "x" + std::to_string(a.cols()) + " * " +
                    std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
                    ")");
  }
  Matrix c(a.rows(), b.cols());
  // i-k-j order: the inner loop walks both b and c rows contiguously.
  for (int i = 0; i < a.rows(); ++i) {
    Real* crow = c.row_data(i);
    const Real* arow = a.row_data(i);
    for (int k = 0; k < a.cols(); ++k) {
      const Real aik = arow[k];
      if (aik == 0.0) continue;
      const Real* brow = b.row_data(k);
      for (int j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

void add_scaled(Matrix& a, const Matrix& b, Real scale) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DataError("add_scaled shape mismatch");
  const std::vector<Real>& src = b.data();
  std::vector<Real>& dst = a.data();
  for (size_t i = 0; i < dst.size(); ++i) dst[i] += scale * src[i];
}

void add_scaled(Vector& a, const Vector& b, Real scale) {
  if (a.size() != b.size()) throw DataError("add_scaled size mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
}

Real frobenius_norm(const Matrix& m) {
  Real sum = 0.0;
  for (Real v : m.data()) sum += v * v;
  return std::sqrt(sum);
}

Real dot(const Vector& a, const Vector& b) {
  Real sum = 0.0;
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) sum += a[i] * b[i];
  return sum;
}

bool all_finite(const Matrix& m) {
  for (Real v : m.data())
    if (!std::isfinite(v)) return false;
  return true;
}

void glorot_init(Matrix& m, int fan_in, int fan_out, std::mt19937& rng) {
  const Real a = std::sqrt(6.0 / (fan_in + fan_out));
  std::uniform_real_distribution<Real> dist(-a, a);
  for (Real& v : m.data()) v = dist(rng);
}

}  // namespace mstre

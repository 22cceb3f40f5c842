// src/kernels.cpp

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

#include "mstre/kernels.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "mstre/errors.h"

namespace mstre {

namespace {

void check_conv1d(const Matrix& input, const Conv1dParams& p) {
  if (p.dilation < 1) throw ConfigError("conv1d: dilation must be >= 1");
  if (p.taps.empty()) throw ConfigError("conv1d: empty tap set");
  for (int t : p.taps)
    if (t < -1 || t > 1)
      throw ConfigError("conv1d: taps must be a subset of {-1, 0, +1}");
  if (input.cols() != p.in_dim ||
      p.weights.rows() != static_cast<int>(p.taps.size()) * p.in_dim ||
      p.weights.cols() != p.out_dim) {
    throw DataError("conv1d shape mismatch: expected input cols " +
                    std::to_string(p.in_dim) + ", got " +
                    std::to_string(input.cols()) + "; weights " +
                    std::to_string(p.taps.size() * p.in_dim) + "x" +
                    std::to_string(p.out_dim) + ", got " +
                    std::to_string(p.weights.rows()) + "x" +
                    std::to_string(p.weights.cols()));
  }
  if (!p.bias.empty() && static_cast<int>(p.bias.size()) != p.out_dim)
    throw DataError("conv1d bias size mismatch");
}

void check_conv2d(const MapStack& input, const Conv2dParams& p) {
  if (static_cast<int>(input.size()) != p.in_channels)
    throw DataError("conv2d shape mismatch: expected " +
                    std::to_string(p.in_channels) + " input channels, got " +
                    std::to_string(input.size()));
  if (input.empty()) throw DataError("conv2d: empty input");
  for (const Matrix& m : input)
    if (m.rows() != input[0].rows() || m.cols() != input[0].cols())
      throw DataError("conv2d: ragged input maps");
  if (p.weights.rows() != p.out_channels ||
      p.weights.cols() != p.in_channels * 9)
    throw DataError("conv2d weight shape mismatch");
  if (static_cast<int>(p.bias.size()) != p.out_channels)
    throw DataError("conv2d bias size mismatch");
}

}  // namespace

Matrix conv1d_dilated(const Matrix& input, const Conv1dParams& p) {
  check_conv1d(input, p);
  const int T = input.rows();
  Matrix out(T, p.out_dim);
  if (!p.bias.empty()) {
    for (int t = 0; t < T; ++t) {
      Real* row = out.row_data(t);
      for (int j = 0; j < p.out_dim; ++j) row[j] = p.bias[j];
    }
  }
  for (size_t k = 0; k < p.taps.size(); ++k) {
    const int offset = p.taps[k] * p.dilation;
    const int wbase = static_cast<int>(k) * p.in_dim;
    for (int t = 0; t < T; ++t) {
      const int src = t + offset;
      if (src < 0 || src >= T) continue;  // zero padding
      const Real* x = input.row_data(src);
      Real* row = out.row_data(t);
      for (int i = 0; i < p.in_dim; ++i) {
        const Real xi = x[i];
        if (xi == 0.0) continue;
        const Real* w = p.weights.row_data(wbase + i);
        for (int j = 0; j < p.out_dim; ++j) row[j] += xi * w[j];
      }
    }
  }
  return out;
}

Matrix conv1d_backward(const Matrix& input, const Conv1dParams& p,
                       const Matrix& grad_out, Conv1dParams* grad_p) {
  check_conv1d(input, p);
  const int T = input.rows();
  Matrix grad_in(T, p.in_dim);
  if (!p.bias.empty()) {
    for (int t = 0; t < T; ++t) {
      const Real* g = grad_out.row_data(t);
      for (int j = 0; j < p.out_dim; ++j) grad_p->bias[j] += g[j];
    }
  }
  for (size_t k = 0; k < p.taps.size(); ++k) {
    const int offset = p.taps[k] * p.dilation;
    const int wbase = static_cast<int>(k) * p.in_dim;
    for (int t = 0; t < T; ++t) {
      const int src = t + offset;
      if (src < 0 || src >= T) continue;
      const Real* g = grad_out.row_data(t);
      const Real* x = input.row_data(src);
      Real* gx = grad_in.row_data(src);
      for (int i = 0; i < p.in_dim; ++i) {
        const Real* w = p.weights.row_data(wbase + i);
        Real* gw = grad_p->weights.row_data(wbase + i);
        Real acc = 0.0;
        const Real xi = x[i];
        for (int j = 0; j < p.out_dim; ++j) {
          acc += g[j] * w[j];
          gw[j] += xi * g[j];
        }
        gx[i] += acc;
      }
    }
  }
  return grad_in;
}

MapStack conv2d_3x3(const MapStack& input, const Conv2dParams& p) {
  check_conv2d(input, p);
  const int H = input[0].rows();
  const int T = input[0].cols();
  const int stride = p.subsample_height ? 2 : 1;
  const int H_out = (H - 1) / stride + 1;  // == ceil(H / stride) with pad 1
  MapStack out(p.out_channels);
  for (int co = 0; co < p.out_channels; ++co) {
    Matrix m(H_out, T, 0.0);
    for (int h = 0; h < H_out; ++h) {
      Real* row = m.row_data(h);
      for (int t = 0; t < T; ++t) row[t] = p.bias[co];
    }
    out[co] = std::move(m);
  }
  for (int co = 0; co < p.out_channels; ++co) {
    const Real* wrow = p.weights.row_data(co);
    Matrix& dst = out[co];
    for (int ci = 0; ci < p.in_channels; ++ci) {
      const Matrix& src = input[ci];
      for (int dh = -1; dh <= 1; ++dh) {
        for (int dt = -1; dt <= 1; ++dt) {
          const Real w = wrow[ci * 9 + (dh + 1) * 3 + (dt + 1)];
          if (w == 0.0) continue;
          for (int ho = 0; ho < dst.rows(); ++ho) {
            const int hi = ho * stride + dh;
            if (hi < 0 || hi >= H) continue;
            const Real* srow = src.row_data(hi);
            Real* drow = dst.row_data(ho);
            const int t0 = std::max(0, -dt), t1 = std::min(T, T - dt);
            for (int t = t0; t < t1; ++t) drow[t] += w * srow[t + dt];
          }
        }
      }
    }
  }
  return out;
}

MapStack conv2d_backward(const MapStack& input, const Conv2dParams& p,
                         const MapStack& grad_out, Conv2dParams* grad_p) {
  check_conv2d(input, p);
  const int H = input[0].rows();
  const int T = input[0].cols();
  const int stride = p.subsample_height ? 2 : 1;
  MapStack grad_in(p.in_channels);
  for (int ci = 0; ci < p.in_channels; ++ci) grad_in[ci] = Matrix(H, T);
  for (int co = 0; co < p.out_channels; ++co) {
    const Matrix& gout = grad_out[co];
    for (int ho = 0; ho < gout.rows(); ++ho) {
      const Real* grow = gout.row_data(ho);
      for (int t = 0; t < T; ++t) grad_p->bias[co] += grow[t];
    }
    const Real* wrow = p.weights.row_data(co);
    Real* gwrow = grad_p->weights.row_data(co);
    for (int ci = 0; ci < p.in_channels; ++ci) {
      const Matrix& src = input[ci];
      Matrix& gin = grad_in[ci];
      for (int dh = -1; dh <= 1; ++dh) {
        for (int dt = -1; dt <= 1; ++dt) {
          const int widx = ci * 9 + (dh + 1) * 3 + (dt + 1);
          const Real w = wrow[widx];
          Real gw = 0.0;
          for (int ho = 0; ho < gout.rows(); ++ho) {
            const int hi = ho * stride + dh;
            if (hi < 0 || hi >= H) continue;
            const Real* grow = gout.row_data(ho);
            const Real* srow = src.row_data(hi);
            Real* girow = gin.row_data(hi);
            const int t0 = std::max(0, -dt), t1 = std::min(T, T - dt);
            for (int t = t0; t < t1; ++t) {
              gw += grow[t] * srow[t + dt];
              girow[t + dt] += grow[t] * w;
            }
          }
          gwrow[widx] += gw;
        }
      }
    }
  }
  return grad_in;
}

Matrix affine(const Matrix& input, const AffineParams& p) {
  Matrix out = matmul(input, p.weights);
  if (!p.bias.empty()) {
    if (static_cast<int>(p.bias.size()) != out.cols())
      throw DataError("affine bias size mismatch");
    for (int r = 0; r < out.rows(); ++r) {
      Real* row = out.row_data(r);
      for (int c = 0; c < out.cols(); ++c) row[c] += p.bias[c];
    }
  }
  return out;
}

Matrix affine_relu(const Matrix& input, const AffineParams& p, bool apply_relu) {
  Matrix out = affine(input, p);
  if (apply_relu) relu_inplace(out);
  return out;
}

Matrix affine_backward(const Matrix& input, const AffineParams& p,
                       const Matrix& grad_out, AffineParams* grad_p) {
  add_scaled(grad_p->weights, matmul(transpose(input), grad_out));
  if (!grad_p->bias.empty()) {
    for (int r = 0; r < grad_out.rows(); ++r) {
      const Real* g = grad_out.row_data(r);
      for (int c = 0; c < grad_out.cols(); ++c) grad_p->bias[c] += g[c];
    }
  }
  return matmul(grad_out, transpose(p.weights));
}

void relu_inplace(Matrix& m) {
  for (Real& v : m.data()) v = std::max<Real>(0.0, v);
}

Matrix relu_backward(const Matrix& output, const Matrix& grad_out) {
  Matrix g = grad_out;
  for (size_t i = 0; i < g.data().size(); ++i)
    if (output.data()[i] <= 0.0) g.data()[i] = 0.0;
  return g;
}

Matrix softmax_rows(const Matrix& input) {
  Matrix out(input.rows(), input.cols());
  for (int r = 0; r < input.rows(); ++r) {
    const Real* x = input.row_data(r);
    Real* y = out.row_data(r);
    Real mx = x[0];
    for (int c = 1; c < input.cols(); ++c) mx = std::max(mx, x[c]);
    Real sum = 0.0;
    for (int c = 0; c < input.cols(); ++c) {
      y[c] = std::exp(x[c] - mx);
      sum += y[c];
    }
    for (int c = 0; c < input.cols(); ++c) y[c] /= sum;
  }
  return out;
}

Matrix log_softmax_rows(const Matrix& input) {
  Matrix out(input.rows(), input.cols());
  for (int r = 0; r < input.rows(); ++r) {
    const Real* x = input.row_data(r);
    Real* y = out.row_data(r);
    Real mx = x[0];
    for (int c = 1; c < input.cols(); ++c) mx = std::max(mx, x[c]);
    Real sum = 0.0;
    for (int c = 0; c < input.cols(); ++c) sum += std::exp(x[c] - mx);
    const Real logz = mx + std::log(sum);
    for (int c = 0; c < input.cols(); ++c) y[c] = x[c] - logz;
  }
  return out;
}

namespace {

// Returns P = M M^T and alpha = trace(P P) / trace(P).
void gram_and_alpha(const Matrix& m, Matrix* gram, Real* alpha) {
  *gram = matmul(m, transpose(m));
  Real trace_p = 0.0, trace_pp = 0.0;
  for (int i = 0; i < gram->rows(); ++i) {
    trace_p += (*gram)(i, i);
    const Real* row = gram->row_data(i);
    for (int j = 0; j < gram->cols(); ++j) trace_pp += row[j] * row[j];
  }
  if (trace_p <= 0.0) throw NumericError("degenerate factor");
  *alpha = trace_pp / trace_p;
}

}  // namespace

Matrix semi_orthogonal_step(const Matrix& m) {
  if (m.rows() > m.cols())
    throw ConfigError("semi_orthogonal_step: factor must be wide (rows <= cols)");
  Matrix gram;
  Real alpha = 0.0;
  gram_and_alpha(m, &gram, &alpha);
  for (int i = 0; i < gram.rows(); ++i) gram(i, i) -= alpha;
  Matrix update = matmul(gram, m);
  Matrix out = m;
  add_scaled(out, update, -0.25);
  return out;
}

Real semi_orthogonality_error(const Matrix& m) {
  Matrix gram;
  Real alpha = 0.0;
  gram_and_alpha(m, &gram, &alpha);
  Real sum = 0.0;
  for (int i = 0; i < gram.rows(); ++i) {
    for (int j = 0; j < gram.cols(); ++j) {
      const Real target = (i == j) ? 1.0 : 0.0;
      const Real d = gram(i, j) / alpha - target;
      sum += d * d;
    }
  }
  return std::sqrt(sum);
}

}  // namespace mstre

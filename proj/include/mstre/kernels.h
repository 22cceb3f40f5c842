// mstre/kernels.h

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

#ifndef MSTRE_KERNELS_H_
#define MSTRE_KERNELS_H_

#include <vector>

#include "mstre/matrix.h"

namespace mstre {

// Dense numeric kernels for the acoustic model: dilated 1-D convolution over
// time, 3x3 2-D convolution with optional height subsampling, affine layers,
// row softmax, and the semi-orthogonal constraint step used by factorized
// TDNN layers. Forward ops are pure; each has a matching backward pass fed
// by the trainer.

/// Parameters of a time convolution. `taps` are unscaled context offsets,
/// each a subset of {-1, 0, +1}; the actual input offset of tap i is
/// taps[i] * dilation. `weights` stacks one input-dim x output-dim block per
/// tap: shape (taps.size() * in_dim) x out_dim. `bias` may be empty (linear
/// bottleneck factors carry no bias).
struct Conv1dParams {
  std::vector<int> taps;
  int dilation = 1;
  int in_dim = 0;
  int out_dim = 0;
  Matrix weights;
  Vector bias;

  size_t param_count() const { return weights.size() + bias.size(); }
};

/// 3x3 2-D convolution over (height x time) maps, zero padded on both axes.
/// `weights` is out_channels x (in_channels * 9), kernel entries in
/// (dh, dt) row-major order with dh, dt in {-1, 0, +1}.
struct Conv2dParams {
  int in_channels = 0;
  int out_channels = 0;
  bool subsample_height = false;  // stride 2 on the height axis only
  Matrix weights;
  Vector bias;

  size_t param_count() const { return weights.size() + bias.size(); }
};

struct AffineParams {
  Matrix weights;  // in_dim x out_dim
  Vector bias;     // out_dim

  size_t param_count() const { return weights.size() + bias.size(); }
};

using MapStack = std::vector<Matrix>;  // one height x time map per channel

// --- forward ---

/// Dilated time convolution with zero padding; output has the same number of
/// rows (time steps) as the input.
Matrix conv1d_dilated(const Matrix& input, const Conv1dParams& p);

/// Zero-padded 3x3 convolution. With subsample_height the output height is
/// ceil(H/2); the time axis is never subsampled here.
MapStack conv2d_3x3(const MapStack& input, const Conv2dParams& p);

Matrix affine(const Matrix& input, const AffineParams& p);
Matrix affine_relu(const Matrix& input, const AffineParams& p, bool apply_relu);

void relu_inplace(Matrix& m);

/// Row-wise softmax, stabilized by row-max subtraction. Rows sum to 1.
Matrix softmax_rows(const Matrix& input);

/// Row-wise log softmax (same stabilization).
Matrix log_softmax_rows(const Matrix& input);

/// One semi-orthogonal constraint update for a wide factor matrix M
/// (rows <= cols):  M <- M - 1/4 (M M^T - alpha I) M  with
/// alpha = trace(M M^T M M^T) / trace(M M^T). Throws NumericError
/// ("degenerate factor") on a zero matrix.
Matrix semi_orthogonal_step(const Matrix& m);

/// || M M^T / alpha - I ||_F with the same alpha as above. Diagnostic used
/// by tests and the constraint schedule.
Real semi_orthogonality_error(const Matrix& m);

// --- backward ---
// Each backward takes the gradient w.r.t. the op output and accumulates
// (+=) into the parameter gradients; it returns the gradient w.r.t. the
// input. Gradient holders must be preallocated with matching shapes.

Matrix conv1d_backward(const Matrix& input, const Conv1dParams& p,
                       const Matrix& grad_out, Conv1dParams* grad_p);

MapStack conv2d_backward(const MapStack& input, const Conv2dParams& p,
                         const MapStack& grad_out, Conv2dParams* grad_p);

Matrix affine_backward(const Matrix& input, const AffineParams& p,
                       const Matrix& grad_out, AffineParams* grad_p);

/// Backward of relu given the post-activation output (output > 0 gates).
Matrix relu_backward(const Matrix& output, const Matrix& grad_out);

}  // namespace mstre

#endif  // MSTRE_KERNELS_H_

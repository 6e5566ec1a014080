#pragma once

#include "seglab/tensor.hpp"

namespace seglab {

/// Parameters of a (transposed) convolution.
///
/// conv2d reads `weight` as (out_ch, in_ch, kh, kw). conv_transpose2d reads
/// the same buffer as (in_ch, out_ch, kh, kw), which makes it the exact
/// adjoint of the matching strided conv2d. `bias` always has one entry per
/// output channel of the operation, stored as a (1, out_ch, 1, 1) tensor.
struct ConvParams {
  TensorPtr weight;
  TensorPtr bias;
  int stride = 1;
  int padding = 0;

  int kernel_h() const { return weight->shape.h; }
  int kernel_w() const { return weight->shape.w; }
};

/// Zero-initialized parameters for conv2d: weight (out_ch, in_ch, kh, kw),
/// bias length out_ch.
ConvParams make_conv_params(int out_ch, int in_ch, int kh, int kw,
                            int stride = 1, int padding = 0,
                            bool requires_grad = true);

/// Zero-initialized parameters for conv_transpose2d: weight
/// (in_ch, out_ch, kh, kw), bias length out_ch.
ConvParams make_conv_transpose_params(int in_ch, int out_ch, int kh, int kw,
                                      int stride, bool requires_grad = true);

/// 2-D cross-correlation with zero padding and per-channel bias.
/// Output spatial size: H' = (H + 2*padding - kh)/stride + 1 (same for W).
TensorPtr conv2d(const TensorPtr& input, const ConvParams& p);

/// Transposed convolution, fixed to kernel 2x2 / stride 2 / no padding (the
/// only configuration the models use). Doubles both spatial dimensions and
/// equals the adjoint of the corresponding strided conv2d plus bias.
TensorPtr conv_transpose2d(const TensorPtr& input, const ConvParams& p);

/// Max pooling over non-overlapping 2x2 windows (H and W must be even).
/// Backward routes the gradient to the first maximum in scan order.
TensorPtr maxpool2d(const TensorPtr& input);

/// Per-channel mean over HxW; output (N, C, 1, 1).
TensorPtr global_avg_pool(const TensorPtr& input);
/// Per-channel max over HxW; output (N, C, 1, 1).
TensorPtr global_max_pool(const TensorPtr& input);

/// Mean across the channel axis; output (N, 1, H, W).
TensorPtr channel_mean(const TensorPtr& input);
/// Max across the channel axis; output (N, 1, H, W). First channel wins ties.
TensorPtr channel_max(const TensorPtr& input);

TensorPtr relu(const TensorPtr& input);
TensorPtr sigmoid(const TensorPtr& input);

/// Elementwise sum/product with broadcasting of size-1 axes.
TensorPtr add(const TensorPtr& a, const TensorPtr& b);
TensorPtr mul(const TensorPtr& a, const TensorPtr& b);

TensorPtr add_scalar(const TensorPtr& a, double s);

/// Concatenation along the channel axis; N, H, W must match.
TensorPtr concat_channels(const TensorPtr& a, const TensorPtr& b);

/// Channels [first, first+count) of the input.
TensorPtr slice_channels(const TensorPtr& input, int first, int count);

/// Sum of all elements as a (1,1,1,1) tensor.
TensorPtr sum_all(const TensorPtr& input);

}  // namespace seglab

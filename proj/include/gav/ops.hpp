// SPDX-License-Identifier: Apache-2.0
#pragma once
#include "gav/graph.hpp"

namespace gav {
namespace ops {

// ---- pointwise / shape ----
Var add(const Var& a, const Var& b);
Var sub(const Var& a, const Var& b);
Var mul_scalar(const Var& a, double s);
Var add_scalar_vars(const std::vector<Var>& terms);  // sum of [1]-shaped scalars
Var leaky_relu(const Var& x, double slope);
Var clamp01(const Var& x);
Var concat_ch(const Var& a, const Var& b);
Var slice_ch(const Var& x, int c0, int c1);  // channels [c0, c1)
Var sum_all(const Var& x);                   // -> [1]
Var mse(const Var& a, const Var& b);         // mean squared error -> [1]
// Records the parent edge (audit reachability) but blocks gradients.
Var stop_gradient(const Var& x);

// ---- convolution ----
// x [Cin,H,W], w [Cout,Cin,kh,kw], b [Cout] (may be null), zero padding.
Var conv2d(const Var& x, const Var& w, const Var& b, int stride, int pad);
// x [Cin,H,W], w [Cin,Cout,k,k]. Output [Cout, (H-1)*s+k-2p, ...].
Var conv_transpose2d(const Var& x, const Var& w, const Var& b, int stride, int pad);
// Depthwise, odd kernel, same padding, stride 1. x [C,H,W], w [C,1,M,M], b [C].
Var depthwise_conv2d(const Var& x, const Var& w, const Var& b);

// ---- resampling ----
Var avg_pool2(const Var& x);   // 2x2 mean, stride 2 (H, W even)
Var upsample2(const Var& x);   // bilinear x2, half-pixel centres
// Backward warp of feat by flow [2,H,W] (ch0 = dx, ch1 = dy), border replicate:
// out(c,y,x) = bilinear(feat, c, y + dy(y,x), x + dx(y,x)).
Var warp_bilinear(const Var& feat, const Var& flow);

// ---- quantization surrogates ----
// x + noise, gradient passes through unchanged.
Var add_noise(const Var& x, const Tensor& noise);
// round(x - offset) + offset with straight-through gradient to x only.
// offset may be null (plain rounding). Ties round away from zero.
Var round_ste(const Var& x, const Var& offset);
// Same forward, but no gradient flows at all (detached chain variant).
Var round_detached(const Var& x, const Var& offset);

// ---- rate terms (per-element bits, -log2 of the bin mass) ----
// Conditional Gaussian with per-element mean/scale tensors.
Var gaussian_bits(const Var& x, const Var& mean, const Var& sigma);
// Per-channel logistic density: mu, log_s are [C] vectors broadcast over HxW.
Var logistic_bits(const Var& x, const Var& mu, const Var& log_s);
// floor + softplus(x), elementwise.
Var softplus_floor(const Var& x, double floor);

}  // namespace ops

// Stable scalar bin masses shared with the integer CDF builder.
double gaussian_bin_prob(double center_dist, double sigma);       // bin [m-.5, m+.5] of N(0, sigma)
double logistic_bin_prob(double x, double mu, double s);          // bin [x-.5, x+.5]

}  // namespace gav

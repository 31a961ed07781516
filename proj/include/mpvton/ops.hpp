#pragma once

#include <torch/torch.h>

namespace mpvton {

/// Floor used by demodulation and by the variance in SPADE normalization.
constexpr double kOpsEpsilon = 1e-8;

/// Backward warp: output(p) = bilinear sample of `x` at p + flow(p).
///
/// x is [B, C, h, w]; flow is [B, 2, h, w] in pixels of the same grid, channel
/// 0 horizontal and channel 1 vertical. Sample positions are clamped to the
/// image border. Differentiable w.r.t. both arguments.
torch::Tensor bilinear_warp(const torch::Tensor& x, const torch::Tensor& flow);

/// 2x bilinear upsampling where output pixel (2i, 2j) sits on input pixel
/// (i, j), i.e. output p samples the input at p / 2 (border clamped). This
/// matches the sampling grid of a stride-2, padding-1 convolution.
torch::Tensor upsample2x(const torch::Tensor& x);

/// Upsamples a [B, 2, h, w] flow to [B, 2, 2h, 2w] and doubles the
/// displacements so they stay in pixels of the finer grid.
torch::Tensor upsample_flow(const torch::Tensor& flow);

/// Area-averages a [B, C, H, W] image down to pyramid level `level` (factor 2^level).
torch::Tensor resize_to_level(const torch::Tensor& image, int level);

/// Per-sample, per-channel standardization over the spatial dims.
torch::Tensor instance_standardize(const torch::Tensor& x, double eps = kOpsEpsilon);

/// Style-modulated convolution with demodulation.
///
/// `scales` is [B, c_in] (the style already projected to per-input-channel
/// scales), `weight` is [c_out, c_in, k, k]. Each sample's weights are scaled
/// per input channel, every output filter is rescaled to unit L2 norm (+eps),
/// and the result is convolved with stride 1 and same padding. No bias.
torch::Tensor modulated_conv(const torch::Tensor& x, const torch::Tensor& scales, const torch::Tensor& weight,
                             double eps = kOpsEpsilon);

/// Modulated convolution with its own style projection and output bias.
class ModulatedConv2dImpl : public torch::nn::Module {
public:
    ModulatedConv2dImpl(int64_t in_channels, int64_t out_channels, int64_t kernel, int64_t style_dim);

    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& style);
    /// Style projected to per-input-channel scales, [B, c_in].
    torch::Tensor project(const torch::Tensor& style);

    torch::nn::Linear affine{nullptr};
    torch::Tensor weight;
    torch::Tensor bias;
};
TORCH_MODULE(ModulatedConv2d);

/// Spatially-adaptive normalization: x is standardized per channel, then
/// scaled and shifted per location by maps predicted from `guidance`.
///
/// Shared 3x3 trunk (guidance -> hidden, ReLU) feeding separate 3x3 gamma and
/// beta heads. Both heads start at zero, so the layer initially reduces to
/// plain standardization.
class SpadeNormImpl : public torch::nn::Module {
public:
    SpadeNormImpl(int64_t channels, int64_t guidance_channels, int64_t hidden);

    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& guidance);
    /// Per-location (gamma, beta) maps predicted from guidance.
    std::pair<torch::Tensor, torch::Tensor> affine_maps(const torch::Tensor& guidance);

    torch::nn::Conv2d shared{nullptr};
    torch::nn::Conv2d gamma{nullptr};
    torch::nn::Conv2d beta{nullptr};

private:
    int64_t channels_;
    int64_t guidance_channels_;
};
TORCH_MODULE(SpadeNorm);

torch::Tensor spade_norm(const torch::Tensor& x, const torch::Tensor& guidance, SpadeNorm& params);

}  // namespace mpvton

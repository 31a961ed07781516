#pragma once

#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"
#include "mpvton/encoder.hpp"
#include "mpvton/flow_estimator.hpp"
#include "mpvton/ops.hpp"

namespace mpvton {

using AppearancePyramid = FeaturePyramid;

struct GeneratorOutput {
    /// [B, 3, H, W] in [-1, 1].
    torch::Tensor image;
    /// modulated[i - 1] is a_W^i for i = 1..N (diagnostics).
    std::vector<torch::Tensor> modulated;
};

/// SPADE normalization of the upsampled previous map, leaky ReLU, 3x3 conv to
/// this level's width.
class SpadeBlockImpl : public torch::nn::Module {
public:
    SpadeBlockImpl(int64_t in_channels, int64_t guidance_channels, int64_t out_channels, int64_t hidden);
    torch::Tensor forward(const torch::Tensor& upsampled, const torch::Tensor& guidance);

    SpadeNorm norm{nullptr};
    torch::nn::Conv2d conv{nullptr};
};
TORCH_MODULE(SpadeBlock);

/// Half-resolution features to a full-resolution image: conv, 2x upsample,
/// conv, conv to RGB, tanh.
class DecoderImpl : public torch::nn::Module {
public:
    DecoderImpl(int64_t in_channels, int64_t mid_channels);
    torch::Tensor forward(const torch::Tensor& x);

    torch::nn::Conv2d conv1{nullptr}, conv2{nullptr}, to_rgb{nullptr};
};
TORCH_MODULE(Decoder);

class GeneratorImpl : public torch::nn::Module {
public:
    explicit GeneratorImpl(const ModelConfig& config);

    AppearancePyramid encode_appearance_person(const torch::Tensor& masked_person);
    AppearancePyramid encode_appearance_garment(const torch::Tensor& garment);
    AppearancePyramid encode_appearance_pose(const torch::Tensor& pose);

    /// Seeds with the pose embedding at level N, then for i = N-1..1 modulates
    /// the upsampled map with the warped person and garment appearance.
    GeneratorOutput forward(const torch::Tensor& pose, const torch::Tensor& masked_person,
                            const torch::Tensor& garment, const FlowEstimate& flows);

    Encoder encoder_person{nullptr}, encoder_garment{nullptr}, encoder_pose{nullptr};
    /// spade_blocks[i - 1] produces a_W^i, i = 1..N-1.
    torch::nn::ModuleList spade_blocks;
    Decoder decoder{nullptr};

private:
    int levels_;
};
TORCH_MODULE(Generator);

/// Conditional patch discriminator over [image, pose] (21 channels): five
/// stride-2 4x4 convolutions with leaky ReLU, logits at (H/32, W/32).
class DiscriminatorImpl : public torch::nn::Module {
public:
    DiscriminatorImpl(int64_t base_channels);
    torch::Tensor forward(const torch::Tensor& image, const torch::Tensor& pose);

    torch::nn::Sequential layers{nullptr};
};
TORCH_MODULE(Discriminator);

}  // namespace mpvton

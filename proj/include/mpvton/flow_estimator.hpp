#pragma once

#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"
#include "mpvton/encoder.hpp"
#include "mpvton/ops.hpp"

namespace mpvton {

/// Flow fields for levels 1..N; never at full input resolution.
struct FlowPyramid {
    /// levels[i - 1] holds level i, [B, 2, H/2^i, W/2^i].
    std::vector<torch::Tensor> levels;

    int count() const { return static_cast<int>(levels.size()); }
    const torch::Tensor& level(int i) const { return levels.at(static_cast<size_t>(i - 1)); }
};

struct FlowEstimate {
    FlowPyramid person;
    FlowPyramid garment;
    /// [B, 2 c_N] style vectors: [pose style, source style].
    torch::Tensor person_style;
    torch::Tensor garment_style;
};

/// Global average pool -> fully connected -> leaky ReLU.
class StyleBlockImpl : public torch::nn::Module {
public:
    explicit StyleBlockImpl(int64_t channels);
    torch::Tensor forward(const torch::Tensor& feature);

    torch::nn::Linear fc{nullptr};
};
TORCH_MODULE(StyleBlock);

/// Modulated 3x3 conv to a hidden map, leaky ReLU, plain 3x3 conv to two
/// channels. The last conv starts at zero, so initial flows are zero.
class FlowHeadImpl : public torch::nn::Module {
public:
    FlowHeadImpl(int64_t in_channels, int64_t hidden, int64_t style_dim);
    torch::Tensor forward(const torch::Tensor& x, const torch::Tensor& style);

    ModulatedConv2d modulated{nullptr};
    torch::nn::Conv2d out{nullptr};
};
TORCH_MODULE(FlowHead);

/// Structure encoders, style embedding and coarse-to-fine residual flow
/// prediction for the person and garment streams.
class FlowEstimatorImpl : public torch::nn::Module {
public:
    explicit FlowEstimatorImpl(const ModelConfig& config);

    FeaturePyramid encode_structure_person(const torch::Tensor& person);
    FeaturePyramid encode_structure_garment(const torch::Tensor& garment);
    FeaturePyramid encode_structure_pose(const torch::Tensor& pose);

    /// [S_pose(pose_top), S_source(source_top)] for the given stream's block.
    torch::Tensor build_style(const torch::Tensor& pose_top, const torch::Tensor& source_top, StyleBlock& source_block);

    /// Inputs are [B, 18, H, W] pose heatmaps and [B, 3, H, W] images.
    FlowEstimate forward(const torch::Tensor& pose, const torch::Tensor& person, const torch::Tensor& garment);

    int levels() const { return levels_; }

    Encoder encoder_person{nullptr}, encoder_garment{nullptr}, encoder_pose{nullptr};
    StyleBlock style_pose{nullptr}, style_person{nullptr}, style_garment{nullptr};
    /// heads_*[i - 1] predicts the level-i flow.
    torch::nn::ModuleList heads_person, heads_garment;

private:
    /// The top level predicts from `top_source`; finer levels warp `refine_source`.
    FlowPyramid predict(const FeaturePyramid& top_source, const FeaturePyramid& refine_source, const torch::Tensor& style,
                        torch::nn::ModuleList& heads);

    ModelConfig config_;
    int levels_;
};
TORCH_MODULE(FlowEstimator);

}  // namespace mpvton

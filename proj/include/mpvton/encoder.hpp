#pragma once

#include <vector>

#include <torch/torch.h>

namespace mpvton {

/// Multi-resolution feature maps {level 0 .. N}; level i is at (H/2^i, W/2^i).
struct FeaturePyramid {
    std::vector<torch::Tensor> levels;

    int top_level() const { return static_cast<int>(levels.size()) - 1; }
    const torch::Tensor& level(int i) const { return levels.at(static_cast<size_t>(i)); }
};

/// Convolutional pyramid encoder: a stride-1 block at full resolution followed
/// by one stride-2 block per level. Each block is conv 3x3 -> instance norm ->
/// leaky ReLU.
class EncoderImpl : public torch::nn::Module {
public:
    EncoderImpl(int64_t in_channels, const std::vector<int64_t>& channels);

    FeaturePyramid forward(const torch::Tensor& x);
    int64_t in_channels() const { return in_channels_; }

private:
    int64_t in_channels_;
    torch::nn::ModuleList blocks_;
};
TORCH_MODULE(Encoder);

}  // namespace mpvton

#pragma once

#include <atomic>
#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"
#include "mpvton/flow_estimator.hpp"
#include "mpvton/generator.hpp"

namespace mpvton {

/// Flow estimator, generator and discriminator under one parameter namespace
/// ("flow.", "generator.", "discriminator.").
class TryOnModelImpl : public torch::nn::Module {
public:
    explicit TryOnModelImpl(const ModelConfig& config);

    FlowEstimate estimate_flows(const torch::Tensor& pose, const torch::Tensor& person, const torch::Tensor& garment);
    GeneratorOutput generate(const torch::Tensor& pose, const torch::Tensor& masked_person, const torch::Tensor& garment,
                             const FlowEstimate& flows);

    /// Flow estimator plus generator: everything the generator-side step updates.
    std::vector<torch::Tensor> generator_side_parameters() const;

    const ModelConfig& config() const { return config_; }
    int64_t estimate_flows_calls() const { return estimate_flows_calls_.load(); }
    int64_t generate_calls() const { return generate_calls_.load(); }
    void reset_call_counts();

    FlowEstimator flow{nullptr};
    Generator generator{nullptr};
    Discriminator discriminator{nullptr};

private:
    ModelConfig config_;
    std::atomic<int64_t> estimate_flows_calls_{0};
    std::atomic<int64_t> generate_calls_{0};
};
TORCH_MODULE(TryOnModel);

}  // namespace mpvton

#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"
#include "mpvton/flow_estimator.hpp"
#include "mpvton/generator.hpp"

namespace mpvton {

/// Frozen multi-block convolutional feature network (phi_1..phi_4). Inputs
/// are [B, 3, H, W] images in [-1, 1].
class FeatureExtractor {
public:
    virtual ~FeatureExtractor() = default;

    static constexpr int kBlocks = 4;

    /// Outputs of blocks 1..last (inclusive).
    virtual std::vector<torch::Tensor> features(const torch::Tensor& image, int last = kBlocks) = 0;
    /// Output of block `l` (1-based).
    torch::Tensor block(const torch::Tensor& image, int l) { return features(image, l).back(); }
    /// Global average of the last block, [B, D]; the embedding used for FID.
    torch::Tensor pooled(const torch::Tensor& image) { return features(image).back().mean({2, 3}); }

    virtual void to(torch::Dtype dtype) = 0;
    virtual std::string profile_name() const = 0;
};

/// Profile B: fixed random ReLU network drawn from `seed`.
std::unique_ptr<FeatureExtractor> make_random_extractor(uint64_t seed);
/// Profile A: VGG-19 convolutional trunk (blocks end at relu1_2, relu2_2,
/// relu3_4, relu4_4) with ImageNet input normalization. The safetensors file
/// holds `features.<i>.weight` / `features.<i>.bias` for conv indices
/// 0,2,5,7,10,12,14,16,19,21,23,25 of the standard layer numbering.
std::unique_ptr<FeatureExtractor> make_pretrained_extractor(const std::filesystem::path& weights);
std::unique_ptr<FeatureExtractor> make_feature_extractor(const LossConfig& config);

/// Minimal safetensors reader/writer (F32/F64 tensors only).
std::map<std::string, torch::Tensor> read_safetensors(const std::filesystem::path& path);
void write_safetensors(const std::filesystem::path& path, const std::map<std::string, torch::Tensor>& tensors);

/// Sum over blocks of the mean absolute feature difference.
torch::Tensor perceptual_loss(FeatureExtractor& extractor, const torch::Tensor& generated, const torch::Tensor& target);

/// Per-location terms exp(-mu_j / mu_max_j) for target features T and
/// warped-source features S, both [B, C, h, w], with reference features R
/// [B, C, h', w'] (the unwarped source). Returns [B, h*w].
///
/// mu_j = cos(T_j, S_j). mu_max_j = max_k cos(T_j, R_k) (PerLocation) or the
/// maximum over all pairs (PerLevel). The ratio is clamped to [-1, 1], so each
/// term lies in [e^-1, e].
torch::Tensor correction_terms(const torch::Tensor& target_features, const torch::Tensor& source_features,
                               const torch::Tensor& reference_features, CorrectionNorm norm, double eps = 1e-8);

/// Same with R = S.
torch::Tensor correction_terms(const torch::Tensor& target_features, const torch::Tensor& source_features,
                               CorrectionNorm norm, double eps = 1e-8);

/// Correction loss of one pyramid level: mean of correction_terms over
/// locations and batch for source warped by `flow`, with features from block
/// `layer` and the unwarped source as reference.
torch::Tensor correction_loss_level(FeatureExtractor& extractor, const torch::Tensor& source, const torch::Tensor& flow,
                                    const torch::Tensor& target, int layer, CorrectionNorm norm);

/// Extractor block used for flow level `level` of an N-level pyramid:
/// N -> 4, N-1 -> 3, everything finer -> 2.
int correction_layer_for_level(int level, int levels);

struct CorrectionLosses {
    torch::Tensor person;   // L_Ic
    torch::Tensor garment;  // L_Gc
    std::vector<torch::Tensor> person_levels;
    std::vector<torch::Tensor> garment_levels;
};

/// Both streams summed over all flow levels. Person: warped R(I_s) vs R(I_gt).
/// Garment: warped R(G) vs R(I_gt * M_gt).
CorrectionLosses correction_loss_total(FeatureExtractor& extractor, const torch::Tensor& person,
                                       const torch::Tensor& garment, const torch::Tensor& ground_truth,
                                       const torch::Tensor& gt_garment_mask, const FlowEstimate& flows,
                                       CorrectionNorm norm);

struct AdversarialLosses {
    torch::Tensor discriminator;  // L_D, generated image detached
    torch::Tensor generator;      // non-saturating L_G_adv
};

/// Binary cross-entropy on patch logits, averaged over patches.
torch::Tensor discriminator_loss(const torch::Tensor& real_logits, const torch::Tensor& fake_logits);
torch::Tensor generator_adversarial_loss(const torch::Tensor& fake_logits);
AdversarialLosses adversarial_losses(Discriminator& discriminator, const torch::Tensor& ground_truth,
                                     const torch::Tensor& generated, const torch::Tensor& pose);

/// lambda_p L_p + lambda_c (L_Ic + L_Gc) + lambda_adv L_G_adv.
torch::Tensor total_loss(const LossWeights& weights, const torch::Tensor& perceptual, const torch::Tensor& person_correction,
                         const torch::Tensor& garment_correction, const torch::Tensor& adversarial);

}  // namespace mpvton

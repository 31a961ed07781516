#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "mpvton/data.hpp"
#include "mpvton/losses.hpp"
#include "mpvton/model.hpp"

namespace mpvton {

/// Gaussian-window SSIM (11x11, sigma 1.5, valid windows, C1 = 0.01^2,
/// C2 = 0.03^2) of two [C, H, W] images in [-1, 1], remapped to [0, 1] and
/// averaged over channels. With a [1, H, W] mask the mean runs over windows
/// whose centers lie in the mask; an empty mask throws.
double ssim(const torch::Tensor& x, const torch::Tensor& y, const std::optional<torch::Tensor>& mask = std::nullopt);

/// Per-block squared L2 distance of channel-normalized features, spatially
/// averaged and summed over blocks. Inputs [C, H, W] or [B, C, H, W].
double lpips_proxy(const torch::Tensor& x, const torch::Tensor& y, FeatureExtractor& extractor);

/// Frechet distance between Gaussian fits of two [n, d] feature sets, with
/// eps * I added to both covariances. eps = 0 requires n > d in both sets.
double fid(const torch::Tensor& features_real, const torch::Tensor& features_generated, double eps = 1e-6);

/// One inference request. The target pose is ignored under VTON.
struct InferenceRequest {
    torch::Tensor person;               // [3, H, W]
    KeypointSet person_keypoints;
    torch::Tensor person_garment_mask;  // [1, H, W]
    torch::Tensor garment;              // [3, H, W]
    std::optional<KeypointSet> target_keypoints;
};

/// Single forward pass: one estimate_flows and one generate call. Returns
/// [3, H, W] in [-1, 1].
torch::Tensor infer(TryOnModel& model, const InferenceRequest& request, TaskKind task);

/// Image produced for a tuple given its derived task inputs.
using ImageSource = std::function<torch::Tensor(const TrainingTuple&, const TaskInputs&)>;

/// The model's try-on image.
ImageSource model_source(TryOnModel& model);
/// The ground truth itself (debug passthrough).
ImageSource identity_source();
/// The ground truth blurred by a box filter of odd size `kernel`.
ImageSource blurred_source(int kernel);

struct MetricRecord {
    std::string tuple_id;
    double ssim = 0;
    double mask_ssim = 0;
    double garment_ssim = 0;
    double lpips_proxy = 0;
};

struct MetricReport {
    TaskKind task = TaskKind::MPVTON;
    std::vector<MetricRecord> records;
    double fid = 0;
    std::string extractor_profile;
    std::string config_hash;
    std::string checkpoint_id;

    double mean(double MetricRecord::*field) const;
    /// Record lines followed by a summary block; see README for field order.
    std::string to_text() const;
};

/// Scores every tuple of `data`. mask_ssim compares both images multiplied by
/// the ground-truth foreground mask (full image when the dataset has none);
/// garment_ssim does the same with the ground-truth garment mask. FID compares
/// pooled extractor features of all generated and ground-truth images.
MetricReport evaluate_corpus(const TupleSource& data, TaskKind task, const ImageSource& source,
                             FeatureExtractor& extractor, double heatmap_sigma);

}  // namespace mpvton

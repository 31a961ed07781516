#pragma once

#include <array>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"

namespace mpvton {

constexpr int kNumJoints = 18;

/// OpenPose BODY-18 joint order.
enum Joint : int {
    kNose = 0, kNeck, kRShoulder, kRElbow, kRWrist, kLShoulder, kLElbow, kLWrist,
    kRHip, kRKnee, kRAnkle, kLHip, kLKnee, kLAnkle, kREye, kLEye, kREar, kLEar
};

struct Keypoint {
    double x = 0;
    double y = 0;
    bool visible = false;
};

struct KeypointSet {
    std::array<Keypoint, kNumJoints> joints{};

    /// Throws std::invalid_argument if a coordinate is non-finite or a visible
    /// joint lies outside [0, width) x [0, height).
    void validate(int64_t height, int64_t width) const;
};

class DatasetError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// [18, H, W] float tensor with a unit-peak Gaussian at each visible joint.
torch::Tensor keypoints_to_heatmap(const KeypointSet& kps, int64_t height, int64_t width, double sigma);

/// JSON object {"keypoints": [[x, y, visible], ...]} with 18 triples.
KeypointSet parse_keypoints_json(const std::string& text);
KeypointSet load_keypoints(const std::filesystem::path& path);
void save_keypoints(const std::filesystem::path& path, const KeypointSet& kps);

/// 8-bit RGB PNG <-> [3, H, W] float in [-1, 1].
torch::Tensor load_image(const std::filesystem::path& path);
void save_image(const std::filesystem::path& path, const torch::Tensor& image);
/// 8-bit grayscale PNG <-> [1, H, W] float in {0, 1} (nonzero pixels are set).
torch::Tensor load_mask(const std::filesystem::path& path);
void save_mask(const std::filesystem::path& path, const torch::Tensor& mask);

/// [3, H, W] in [-1, 1] -> HxWx3 uint8 RGB, row-major.
std::vector<uint8_t> image_to_rgb8(const torch::Tensor& image);

/// One supervised sample. Images are [3, H, W] in [-1, 1]; masks [1, H, W].
struct TrainingTuple {
    std::string id;
    torch::Tensor person;
    KeypointSet person_keypoints;
    KeypointSet target_keypoints;
    torch::Tensor garment;
    torch::Tensor ground_truth;
    torch::Tensor person_garment_mask;
    torch::Tensor gt_garment_mask;
    /// Optional foreground masks; undefined when the dataset has none.
    torch::Tensor person_foreground_mask;
    torch::Tensor gt_foreground_mask;
};

/// Files of one tuple under the on-disk layout.
struct TupleRef {
    std::string person_a;
    std::string person_b;
    std::string garment;
    std::filesystem::path person_image, person_keypoints, person_mask;
    std::filesystem::path target_image, target_keypoints, target_mask;
    std::filesystem::path garment_image;
    /// Empty when absent.
    std::filesystem::path person_foreground, target_foreground;

    std::string id() const { return person_a + "," + person_b + "," + garment; }
};

/// Reads root/tuples.csv and checks every referenced file exists.
std::vector<TupleRef> scan_dataset(const std::filesystem::path& root);
TrainingTuple load_tuple(const TupleRef& ref);

/// Random-access source of training tuples.
class TupleSource {
public:
    virtual ~TupleSource() = default;
    virtual size_t size() const = 0;
    virtual TrainingTuple get(size_t index) const = 0;
};

class DiskDataset final : public TupleSource {
public:
    explicit DiskDataset(const std::filesystem::path& root);
    size_t size() const override { return refs_.size(); }
    TrainingTuple get(size_t index) const override;
    const std::vector<TupleRef>& refs() const { return refs_; }

private:
    std::vector<TupleRef> refs_;
};

/// Model inputs for one task, all [C, H, W].
struct TaskInputs {
    torch::Tensor person;
    torch::Tensor masked_person;
    torch::Tensor garment;
    torch::Tensor target_pose;
    torch::Tensor ground_truth;
    /// Garment mask of ground_truth (the person mask under VTON).
    torch::Tensor gt_garment_mask;
};

TaskInputs derive_task_inputs(const TrainingTuple& t, TaskKind task, double heatmap_sigma);

/// TaskInputs stacked along a leading batch dimension.
struct Batch {
    torch::Tensor person;
    torch::Tensor masked_person;
    torch::Tensor garment;
    torch::Tensor target_pose;
    torch::Tensor ground_truth;
    torch::Tensor gt_garment_mask;
    TaskKind task = TaskKind::MPVTON;

    int64_t size() const { return person.size(0); }
    Batch to(torch::Dtype dtype) const;
};

Batch collate(const std::vector<TaskInputs>& items, TaskKind task);

}  // namespace mpvton

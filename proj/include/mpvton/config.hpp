#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mpvton {

/// One of the three tasks the model is trained on. Every training step
/// carries exactly one of these.
enum class TaskKind { MPVTON, VTON, POSE_TRANSFER };

std::string_view to_string(TaskKind task);
TaskKind parse_task(std::string_view text);

/// Which structure map the person-stream flow head warps at refinement
/// levels. `Person` warps the person structure features; `Pose` warps the
/// target-pose features.
enum class PersonFlowSource { Person, Pose };

/// A = pretrained classification weights loaded from file, B = fixed random
/// network built from a recorded seed.
enum class ExtractorProfile { Pretrained, Random };

/// Normalizer of the correction loss: best match per target location, or a
/// single maximum over the whole level.
enum class CorrectionNorm { PerLocation, PerLevel };

class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error(message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

struct SynthConfig {
    int64_t height = 128;
    int64_t width = 96;
    double limb_scale_min = 0.9;
    double limb_scale_max = 1.1;
    /// Maximum deviation of arm/leg angles from the rest pose, degrees.
    double max_limb_swing_deg = 70.0;
    /// Horizontal root jitter as a fraction of the image width.
    double root_jitter = 0.06;
};

struct ModelConfig {
    int64_t height = 128;
    int64_t width = 96;
    /// Encoder widths c_0..c_N; the number of flow levels is size() - 1.
    std::vector<int64_t> channels{16, 32, 64, 128};
    int64_t flow_hidden = 32;
    int64_t spade_hidden = 64;
    int64_t disc_base = 32;
    PersonFlowSource person_flow_source = PersonFlowSource::Person;
    double heatmap_sigma = 3.0;

    int levels() const { return static_cast<int>(channels.size()) - 1; }
};

struct LossWeights {
    double lambda_p = 1.0;
    double lambda_c = 2.0;
    double lambda_adv = 0.1;
};

struct LossConfig {
    LossWeights weights;
    ExtractorProfile profile = ExtractorProfile::Random;
    uint64_t extractor_seed = 20220131;
    std::string extractor_weights;
    CorrectionNorm correction_norm = CorrectionNorm::PerLocation;
};

struct TrainConfig {
    int64_t warmup_steps = 2000;
    int64_t joint_steps = 20000;
    int64_t batch_size = 4;
    double base_lr = 5e-4;
    /// Global step (warm-up included) after which the learning rate decays
    /// linearly to zero at warmup_steps + joint_steps.
    int64_t decay_start_step = 10000;
    /// Probabilities of MPVTON, VTON, POSE_TRANSFER.
    std::array<double, 3> task_mix{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
    uint64_t seed = 0;
    int64_t checkpoint_interval = 1000;
    double grad_clip = 10.0;
    double adam_beta1 = 0.5;
    double adam_beta2 = 0.999;
    /// Train on the first batch_size tuples every step instead of sampling.
    bool fixed_batch = false;
    int64_t num_threads = 1;

    int64_t total_steps() const { return warmup_steps + joint_steps; }
};

/// Flat key=value configuration covering every tunable of a run.
struct RunConfig {
    ModelConfig model;
    LossConfig loss;
    TrainConfig train;
    SynthConfig synth;

    struct KeyInfo {
        std::string name;
        std::string default_value;
        std::string doc;
    };

    /// Every accepted key with its default and a one-line description.
    static std::vector<KeyInfo> keys();

    /// Parses `key = value` lines; `#` starts a comment. Unknown keys throw.
    static RunConfig from_text(std::string_view text);
    static RunConfig from_file(const std::filesystem::path& path);

    void set(std::string_view key, std::string_view value);
    std::string get(std::string_view key) const;

    /// Sorted `key = value` lines; parsing it back yields an equal config.
    std::string canonical_text() const;
    /// 16 hex digits of FNV-1a over canonical_text().
    std::string hash() const;

    /// Throws ConfigError on the first violated invariant.
    void validate() const;
};

}  // namespace mpvton

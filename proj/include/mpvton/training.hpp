#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>

#include <torch/torch.h>

#include "mpvton/checkpoint.hpp"
#include "mpvton/config.hpp"
#include "mpvton/data.hpp"
#include "mpvton/losses.hpp"
#include "mpvton/model.hpp"

namespace mpvton {

/// Raised when a loss term becomes non-finite; names the term and step.
class TrainingError : public std::runtime_error {
public:
    TrainingError(std::string term, int64_t step, const std::string& message)
        : std::runtime_error(message), term_(std::move(term)), step_(step) {}
    const std::string& term() const noexcept { return term_; }
    int64_t step() const noexcept { return step_; }

private:
    std::string term_;
    int64_t step_;
};

enum class Phase { Warmup, Joint };

/// Loss terms of one optimization step. Terms not computed in the phase are 0.
struct StepLosses {
    int64_t step = 0;  // 1-based global step
    Phase phase = Phase::Warmup;
    TaskKind task = TaskKind::MPVTON;
    double lr = 0;
    double perceptual = 0;
    double person_correction = 0;
    double garment_correction = 0;
    double generator_adversarial = 0;
    double discriminator = 0;
    double total = 0;  // warm-up: L_Ic + L_Gc; joint: weighted generator objective
};

/// `step=.. phase=.. task=.. lr=.. l_p=.. l_ic=.. l_gc=.. l_adv=.. l_d=.. total=..`
std::string format_loss_line(const StepLosses& losses);

/// Learning rate used by 1-based global step `step`: base_lr up to
/// decay_start_step, then linear to exactly 0 at total_steps().
double learning_rate(const TrainConfig& config, int64_t step);

/// Task drawn for `step` from task_mix; a pure function of (seed, step).
TaskKind sample_task(const TrainConfig& config, int64_t step);
/// Dataset indices of the batch for `step`; a pure function of (seed, step).
std::vector<size_t> sample_indices(const TrainConfig& config, int64_t step, size_t dataset_size);

/// Owns the model, frozen extractor and optimizers of one run and advances it
/// one step at a time. Steps 1..warmup_steps train the flow estimator on the
/// correction losses; the remaining steps alternate generator-side and
/// discriminator updates.
class Trainer {
public:
    Trainer(RunConfig config, const TupleSource& data);

    /// Loads parameters, optimizer moments and the step counter.
    void restore(const Checkpoint& checkpoint);
    Checkpoint checkpoint() const;

    StepLosses step();
    /// Runs until `last_step` (inclusive, clamped to total_steps()).
    void run_until(int64_t last_step, const std::function<void(const StepLosses&)>& on_step = {});

    int64_t completed_steps() const { return step_; }
    bool finished() const { return step_ >= config_.train.total_steps(); }

    Batch batch_for_step(int64_t step, TaskKind task) const;

    const RunConfig& config() const { return config_; }
    TryOnModel& model() { return model_; }
    FeatureExtractor& extractor() { return *extractor_; }

private:
    StepLosses warmup_step(const Batch& batch, StepLosses out);
    StepLosses joint_step(const Batch& batch, StepLosses out);
    void set_lr(double lr);

    RunConfig config_;
    const TupleSource& data_;
    TryOnModel model_{nullptr};
    std::unique_ptr<FeatureExtractor> extractor_;
    std::unique_ptr<torch::optim::Adam> gen_opt_;
    std::unique_ptr<torch::optim::Adam> disc_opt_;
    int64_t step_ = 0;
};

/// Builds a trainer seeded from the config and runs the warm-up phase.
Checkpoint warmup_flow(const RunConfig& config, const TupleSource& data,
                       const std::function<void(const StepLosses&)>& on_step = {});
/// Resumes from `init` and runs the remaining (joint) steps.
Checkpoint train_joint(const RunConfig& config, const TupleSource& data, const Checkpoint& init,
                       const std::function<void(const StepLosses&)>& on_step = {});

/// Restores only the model parameters of a checkpoint (inference).
TryOnModel load_model(const Checkpoint& checkpoint);

}  // namespace mpvton

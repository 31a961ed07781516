#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mpvton/config.hpp"
#include "mpvton/data.hpp"

namespace mpvton {

using Rgb = std::array<uint8_t, 3>;

/// Colors a synthetic garment may use. No other synthetic surface (skin,
/// hair, trousers, backgrounds) uses any of them.
const std::vector<Rgb>& garment_palette();

/// Renders one articulated figure wearing a textured torso garment at two
/// random poses. Pure function of (seed, config).
TrainingTuple synth_sample(uint64_t seed, const SynthConfig& config);

/// Pixels of a flat garment image that differ from its (uniform) background,
/// read from the top-left corner. [1, H, W] in {0, 1}.
torch::Tensor flat_garment_mask(const torch::Tensor& garment);

/// Seed of the index-th tuple of a synthetic corpus.
uint64_t synth_tuple_seed(uint64_t base_seed, size_t index);

class SyntheticDataset final : public TupleSource {
public:
    SyntheticDataset(SynthConfig config, uint64_t base_seed, size_t count)
        : config_(std::move(config)), base_seed_(base_seed), count_(count) {}
    size_t size() const override { return count_; }
    TrainingTuple get(size_t index) const override;

private:
    SynthConfig config_;
    uint64_t base_seed_;
    size_t count_;
};

/// Writes `count` tuples in the on-disk dataset layout (plus foreground masks)
/// and returns a hex checksum over every written file.
std::string write_synthetic_dataset(const std::filesystem::path& root, const SynthConfig& config, uint64_t seed,
                                    size_t count);

/// FNV-1a over tuples.csv and all files referenced by it, in index order.
std::string dataset_checksum(const std::filesystem::path& root);

}  // namespace mpvton

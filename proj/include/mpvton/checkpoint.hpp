#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <torch/torch.h>

#include "mpvton/config.hpp"

namespace mpvton {

constexpr uint32_t kCheckpointVersion = 1;

/// Thrown for unreadable, truncated or incompatible checkpoint files.
/// `section()` names the part that failed: "magic", "version", "config",
/// "step", "record count" or "record <index> (<name>)".
class CheckpointError : public std::runtime_error {
public:
    CheckpointError(std::string section, const std::string& message)
        : std::runtime_error(message), section_(std::move(section)) {}
    const std::string& section() const noexcept { return section_; }

private:
    std::string section_;
};

struct TensorRecord {
    std::string name;
    torch::Tensor value;  // float32, float64 or int64, CPU
};

/// Binary layout (little-endian):
///   "MPVT" | u32 version | u64 n + n bytes canonical config | i64 step |
///   u64 record count | records...
/// record: u32 n + name | u8 dtype (0 f32, 1 f64, 2 i64) | u32 rank |
///         rank x i64 dims | u64 n + raw bytes
struct Checkpoint {
    uint32_t version = kCheckpointVersion;
    std::string config_text;
    int64_t step = 0;
    std::vector<TensorRecord> records;

    RunConfig config() const { return RunConfig::from_text(config_text); }
    /// Record by name, or an undefined tensor.
    torch::Tensor find(std::string_view name) const;
};

std::string serialize_checkpoint(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(std::string_view bytes);

void save_checkpoint(const std::filesystem::path& path, const Checkpoint& checkpoint);
Checkpoint load_checkpoint(const std::filesystem::path& path);

}  // namespace mpvton

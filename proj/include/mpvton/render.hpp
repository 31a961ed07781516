#pragma once

#include <vector>

#include <torch/torch.h>

#include "mpvton/data.hpp"

namespace mpvton {

/// Skeleton drawing of visible joints and limbs on black, [3, H, W] in [-1, 1].
torch::Tensor render_pose(const KeypointSet& kps, int64_t height, int64_t width);

/// Tiles rows of equally sized [3, H, W] images into one [3, rows*H, cols*W]
/// image. Every row must have the same number of cells.
torch::Tensor make_grid(const std::vector<std::vector<torch::Tensor>>& rows);

}  // namespace mpvton

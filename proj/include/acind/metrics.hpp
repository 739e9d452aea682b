#pragma once

#include <span>

#include "acind/grid.hpp"

namespace acind {

/// Peak signal-to-noise ratio in dB. Returns +infinity when the grids are
/// identical (MSE = 0) so per-epoch logging never has to special-case it.
double psnr(const ImageGrid& reference, const ImageGrid& test, double data_range);

/// Mean local SSIM with an 11x11 Gaussian window (sigma 1.5) over all fully
/// interior window positions; C1=(0.01*range)^2, C2=(0.03*range)^2.
/// Both dimensions must be >= 11.
double ssim(const ImageGrid& reference, const ImageGrid& test, double data_range);

/// Euclidean distance between equal-length vectors.
double l2_distance(std::span<const double> a, std::span<const double> b);

}  // namespace acind

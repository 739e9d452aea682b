#pragma once

#include "acind/geometry.hpp"
#include "acind/grid.hpp"

namespace acind {

struct SirtConfig {
    int num_iters = 2000;
    bool nonneg_clamp = true;
};

/// Filtered back projection: ramp-filter each projection row, then
/// backproject with linear interpolation between detector bins, scaled by
/// pi/num_angles to approximate the angular integral.
ImageGrid fbp(const Sinogram& sino, const ScanGeometry& geom);

/// Simultaneous iterative reconstruction technique:
///   x <- x + C * A^T * R * (y - A x)
/// with R = diag(1/row sums of A), C = diag(1/column sums of A), x0 = 0.
/// Empty rows/columns contribute zero update. Optional nonnegativity clamp
/// after each iteration.
ImageGrid sirt(const Sinogram& sino, const ScanGeometry& geom, const SirtConfig& cfg);

}  // namespace acind

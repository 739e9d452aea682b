#pragma once

#include <vector>

#include "acind/grid.hpp"

namespace acind {

/// Parallel-beam scan description. Angles are equiangular over [0, pi):
/// angle[k] = k*pi/U. The detector array is centered on the rotation center
/// (the image center); detector positions are (v - (V-1)/2) * spacing in
/// pixel units.
struct ScanGeometry {
    int num_angles = 0;     // U
    int num_detectors = 0;  // V
    double detector_spacing = 1.0;
    std::vector<double> angles;  // radians, strictly increasing
    int image_height = 0;  // H, operator domain
    int image_width = 0;   // W

    /// Standard setup: equiangular views, spacing 1, V covering the grid
    /// diagonal (ceil(sqrt(2)*max(H,W))) unless given explicitly.
    static ScanGeometry parallel(int num_angles, int image_h, int image_w,
                                 int num_detectors = 0, double spacing = 1.0);

    double detector_offset(int v) const {
        return (v - (num_detectors - 1) / 2.0) * detector_spacing;
    }

    void validate() const;
};

}  // namespace acind

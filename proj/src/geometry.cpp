#include "acind/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace acind {

ScanGeometry ScanGeometry::parallel(int num_angles, int image_h, int image_w,
                                    int num_detectors, double spacing) {
    if (num_angles < 1) throw std::invalid_argument("ScanGeometry: num_angles must be >= 1");
    if (image_h < 1 || image_w < 1) throw std::invalid_argument("ScanGeometry: bad image size");
    ScanGeometry g;
    g.num_angles = num_angles;
    g.num_detectors = num_detectors > 0
                          ? num_detectors
                          : static_cast<int>(std::ceil(std::numbers::sqrt2 * std::max(image_h, image_w)));
    g.detector_spacing = spacing;
    g.image_height = image_h;
    g.image_width = image_w;
    g.angles.resize(num_angles);
    for (int k = 0; k < num_angles; ++k)
        g.angles[k] = k * std::numbers::pi / num_angles;
    g.validate();
    return g;
}

void ScanGeometry::validate() const {
    if (num_angles < 1 || num_detectors < 1)
        throw std::invalid_argument("ScanGeometry: U and V must be >= 1");
    if (!(detector_spacing > 0.0)) throw std::invalid_argument("ScanGeometry: spacing must be positive");
    if (image_height < 1 || image_width < 1)
        throw std::invalid_argument("ScanGeometry: image dimensions must be >= 1");
    if (static_cast<int>(angles.size()) != num_angles)
        throw std::invalid_argument("ScanGeometry: angle count mismatch");
    for (size_t i = 1; i < angles.size(); ++i)
        if (!(angles[i] > angles[i - 1]))
            throw std::invalid_argument("ScanGeometry: angles must be strictly increasing");
}

}  // namespace acind

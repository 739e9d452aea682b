#include "acind/grid.hpp"

#include <algorithm>
#include <cmath>

namespace acind {

double ImageGrid::min_value() const { return *std::min_element(data.begin(), data.end()); }
double ImageGrid::max_value() const { return *std::max_element(data.begin(), data.end()); }

bool ImageGrid::all_finite() const {
    return std::all_of(data.begin(), data.end(), [](double v) { return std::isfinite(v); });
}

void ImageGrid::validate() const {
    if (height <= 0 || width <= 0) throw std::invalid_argument("ImageGrid: dimensions must be positive");
    if (data.size() != static_cast<size_t>(height) * width)
        throw std::invalid_argument("ImageGrid: data length does not match H*W");
    if (!all_finite()) throw std::invalid_argument("ImageGrid: non-finite values");
}

bool Sinogram::all_finite() const {
    return std::all_of(data.begin(), data.end(), [](double v) { return std::isfinite(v); });
}

void Sinogram::validate() const {
    if (num_angles <= 0 || num_detectors <= 0)
        throw std::invalid_argument("Sinogram: dimensions must be positive");
    if (data.size() != static_cast<size_t>(num_angles) * num_detectors)
        throw std::invalid_argument("Sinogram: data length does not match U*V");
    if (!all_finite()) throw std::invalid_argument("Sinogram: non-finite values");
}

void LabelMap::validate() const {
    if (height <= 0 || width <= 0 || num_materials <= 0)
        throw std::invalid_argument("LabelMap: bad dimensions");
    if (labels.size() != static_cast<size_t>(height) * width)
        throw std::invalid_argument("LabelMap: label count does not match H*W");
    for (int v : labels)
        if (v < 1 || v > num_materials) throw std::invalid_argument("LabelMap: label out of range");
}

}  // namespace acind

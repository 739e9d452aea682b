#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace acind {

/// H x W field of linear attenuation coefficients, row-major.
struct ImageGrid {
    int height = 0;
    int width = 0;
    std::vector<double> data;  // size height*width

    ImageGrid() = default;
    ImageGrid(int h, int w, double fill = 0.0)
        : height(h), width(w), data(static_cast<size_t>(h) * w, fill) {
        if (h <= 0 || w <= 0) throw std::invalid_argument("ImageGrid: dimensions must be positive");
    }

    double& at(int i, int j) { return data[static_cast<size_t>(i) * width + j]; }
    double at(int i, int j) const { return data[static_cast<size_t>(i) * width + j]; }
    size_t size() const { return data.size(); }

    double min_value() const;
    double max_value() const;
    bool all_finite() const;
    void validate() const;  // throws if invariants are broken
};

/// U x V measurement array: num_angles projections of num_detectors samples,
/// row-major (angle-major).
struct Sinogram {
    int num_angles = 0;
    int num_detectors = 0;
    std::vector<double> data;  // size num_angles*num_detectors

    Sinogram() = default;
    Sinogram(int u, int v, double fill = 0.0)
        : num_angles(u), num_detectors(v), data(static_cast<size_t>(u) * v, fill) {
        if (u <= 0 || v <= 0) throw std::invalid_argument("Sinogram: dimensions must be positive");
    }

    double& at(int a, int d) { return data[static_cast<size_t>(a) * num_detectors + d]; }
    double at(int a, int d) const { return data[static_cast<size_t>(a) * num_detectors + d]; }
    size_t size() const { return data.size(); }

    bool all_finite() const;
    void validate() const;
};

/// H x W per-pixel material labels in {1..num_materials}.
struct LabelMap {
    int height = 0;
    int width = 0;
    int num_materials = 0;
    std::vector<int> labels;  // size height*width, values in [1, num_materials]

    LabelMap() = default;
    LabelMap(int h, int w, int k, int fill = 1)
        : height(h), width(w), num_materials(k), labels(static_cast<size_t>(h) * w, fill) {
        if (h <= 0 || w <= 0 || k <= 0) throw std::invalid_argument("LabelMap: bad dimensions");
    }

    int& at(int i, int j) { return labels[static_cast<size_t>(i) * width + j]; }
    int at(int i, int j) const { return labels[static_cast<size_t>(i) * width + j]; }

    void validate() const;
};

/// The K learnable attenuation coefficients of the AC estimator.
using AcVector = std::vector<double>;

inline void require_same_shape(const ImageGrid& a, const ImageGrid& b, const char* what) {
    if (a.height != b.height || a.width != b.width)
        throw std::invalid_argument(std::string(what) + ": grid dimensions differ");
}

}  // namespace acind

#pragma once

#include <utility>
#include <vector>

#include "acind/geometry.hpp"
#include "acind/grid.hpp"

namespace acind {

/// One ray's exact intersection with the pixel lattice: (pixel index, length).
/// Lengths are in pixel units; their sum is bounded by the chord length of the
/// ray through the grid bounding box.
struct RayPath {
    std::vector<std::pair<int, double>> segments;

    double total_length() const {
        double s = 0.0;
        for (const auto& [idx, len] : segments) s += len;
        return s;
    }
};

/// Exact pixel/ray intersection lengths (Siddon-style) for one ray.
/// The ray for (angle index a, detector index v) passes through
/// center + offset(v)*(cos t, sin t) with direction (-sin t, cos t).
RayPath trace_ray(const ScanGeometry& geom, int angle_index, int detector_index);

/// Discrete parallel-beam Radon transform: length-weighted sums of pixel
/// values along each ray. Linear in the image; rows are independent, so the
/// result is bitwise identical under any parallel schedule.
Sinogram forward_project(const ImageGrid& image, const ScanGeometry& geom);

/// Exact matrix transpose of forward_project under the same ray weights.
ImageGrid back_project(const Sinogram& sino, const ScanGeometry& geom);

/// Ray paths traced once and reused; apply()/apply_adjoint() accumulate in
/// the same per-ray order as forward_project/back_project, so results are
/// bitwise identical to the one-shot functions.
class ProjectionOperator {
  public:
    explicit ProjectionOperator(const ScanGeometry& geom);

    Sinogram apply(const ImageGrid& image) const;
    ImageGrid apply_adjoint(const Sinogram& sino) const;
    const ScanGeometry& geometry() const { return geom_; }
    const RayPath& ray(int angle_index, int detector_index) const {
        return rays_[static_cast<size_t>(angle_index) * geom_.num_detectors + detector_index];
    }

  private:
    ScanGeometry geom_;
    std::vector<RayPath> rays_;  // angle-major
};

/// Per-angle Ram-Lak filtering of detector rows via a zero-padded DFT of
/// length 2*next_pow2(V). The frequency response is the DFT of the closed-form
/// band-limited ramp kernel h(0)=1/4, h(odd n)=-1/(pi n)^2, h(even n)=0, so a
/// unit impulse row maps exactly to the kernel samples.
Sinogram ramp_filter(const Sinogram& sino, const ScanGeometry& geom);

namespace detail {
/// Spatial Ram-Lak kernel sample at offset n (spacing 1).
double ramp_kernel_sample(long n);
/// Smallest power of two >= n.
int next_pow2(int n);
}  // namespace detail

}  // namespace acind

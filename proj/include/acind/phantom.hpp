#pragma once

#include <vector>

#include "acind/geometry.hpp"
#include "acind/grid.hpp"
#include "acind/rng.hpp"

namespace acind {

/// Per-material attenuation values; label 1 is reserved for background/air
/// and must be 0. All values distinct.
struct MaterialSpec {
    std::vector<double> values;

    int num_materials() const { return static_cast<int>(values.size()); }
    void validate() const;

    /// air + the given number of extra materials, spread over [0.5, 2.5]
    static MaterialSpec defaults(int num_materials);
};

/// Ground-truth bundle: attenuation image, exact per-pixel material labels,
/// and the true attenuation coefficient vector.
struct PhantomPair {
    ImageGrid image;
    LabelMap labels;
    AcVector true_acv;

    void validate() const;  // image[p] == true_acv[label[p]-1] everywhere
};

/// Ellipse in pixel units; the interior test runs on pixel centers
/// (i+0.5, j+0.5): rotate the offset by -rotation, then
/// (dy/semi_i)^2 + (dx/semi_j)^2 <= 1.
struct Ellipse {
    double center_i = 0.0, center_j = 0.0;
    double semi_i = 1.0, semi_j = 1.0;
    double rotation = 0.0;  // radians
    int material = 2;       // label painted inside
};

/// Deterministic rasterization; later ellipses overwrite earlier ones.
PhantomPair phantom_from_ellipses(int height, int width, const MaterialSpec& spec,
                                  const std::vector<Ellipse>& ellipses);

/// Seeded random multi-material phantom: num_ellipses random non-degenerate
/// ellipses in painter's order, materials cycling over 2..K so every material
/// appears when num_ellipses >= K-1. Centers fall in [0.3,0.7] of the grid and
/// semi-axes in [0.09,0.22] of the grid so every ellipse fits inside.
PhantomPair ellipse_material_phantom(uint64_t seed, int height, int width,
                                     const MaterialSpec& spec, int num_ellipses);

/// Three-material blob phantom: a rounded body (overlapping discs of material
/// 2) carrying disc inclusions of material 3 on an air background. The disc
/// list is fixed in code; ac_values = (0, body, inclusion), all distinct.
PhantomPair barbapapa_like_phantom(int height, int width, const std::array<double, 3>& ac_values);

/// Modified Shepp-Logan head phantom (additive ellipse intensities); used by
/// the classical-baseline tests, so no label map.
ImageGrid shepp_logan_phantom(int height, int width);

/// Forward projection of the phantom image, with optional additive Gaussian
/// detector noise (seeded) when noise_sigma > 0.
Sinogram simulate_scan(const PhantomPair& pair, const ScanGeometry& geom, double noise_sigma,
                       uint64_t noise_seed = 0);

}  // namespace acind

#pragma once

#include <vector>

#include "acind/grid.hpp"

namespace acind {

/// Intensity histogram over [min, max] of the source image.
struct Histogram {
    int num_bins = 256;
    std::vector<long> counts;      // size num_bins, sums to the pixel count
    double lo = 0.0, hi = 0.0;     // bin edges span [lo, hi]

    double bin_width() const { return (hi - lo) / num_bins; }
    /// Upper edge of bin b, i.e. the threshold value separating b from b+1.
    double upper_edge(int b) const { return lo + (b + 1) * bin_width(); }
};

Histogram make_histogram(const ImageGrid& image, int num_bins = 256);

/// K binary masks of shape H x W; pairwise disjoint, union covers the grid.
struct MaskSet {
    int height = 0;
    int width = 0;
    std::vector<std::vector<uint8_t>> masks;  // masks[k][i*W+j] in {0,1}

    int num_materials() const { return static_cast<int>(masks.size()); }
    /// 1-based label of a pixel (the unique mask containing it).
    int label_at(size_t p) const;
    void validate() const;  // disjointness + coverage
};

/// Multi-Otsu thresholds: K-1 strictly increasing values maximizing the
/// between-class variance over the histogram. Exhaustive search over
/// threshold tuples (Liao-style cumulative lookup tables) for K <= 4 at any
/// bin count and for K in {5,6} at B <= 64; larger (K, B) combinations use a
/// coarse-to-fine pass: solve at 64 bins, then refine each threshold within
/// +-2 fine bins. Ties break toward the lexicographically smallest tuple.
/// Requires 2 <= K <= 6 and at least K distinct image values.
std::vector<double> multi_otsu(const ImageGrid& image, int num_classes, int num_bins = 256);

/// Same search on a prebuilt histogram; returns threshold BIN indices
/// (threshold t separates bins <= t from bins > t).
std::vector<int> multi_otsu_bins(const std::vector<long>& counts, int num_classes);

/// Pixel with value v gets class j where t_{j-1} < v <= t_j (t_0 = -inf,
/// t_K = +inf); a value exactly equal to a threshold joins the lower region.
MaskSet masks_from_thresholds(const ImageGrid& image, const std::vector<double>& thresholds);

/// Region means a_j = mean of the image over pixels where mask_j = 1 and the
/// image value is nonzero (exact zeros are excluded). A region whose masked
/// values are all zero (or an empty mask) yields 0 with a warning flag.
struct RegionMeans {
    AcVector means;
    std::vector<bool> degenerate;  // true where the nonzero-mean was undefined
};

RegionMeans region_means(const ImageGrid& image, const MaskSet& masks);

}  // namespace acind

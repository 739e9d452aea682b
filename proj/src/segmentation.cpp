#include "acind/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace acind {

Histogram make_histogram(const ImageGrid& image, int num_bins) {
    if (num_bins < 1) throw std::invalid_argument("make_histogram: num_bins must be >= 1");
    Histogram h;
    h.num_bins = num_bins;
    h.counts.assign(num_bins, 0);
    h.lo = image.min_value();
    h.hi = image.max_value();
    const double span = h.hi - h.lo;
    for (double v : image.data) {
        int b = span > 0.0 ? static_cast<int>((v - h.lo) / span * num_bins) : 0;
        if (b < 0) b = 0;
        if (b >= num_bins) b = num_bins - 1;
        ++h.counts[b];
    }
    return h;
}

int MaskSet::label_at(size_t p) const {
    for (int k = 0; k < num_materials(); ++k)
        if (masks[k][p]) return k + 1;
    throw std::logic_error("MaskSet: pixel not covered by any mask");
}

void MaskSet::validate() const {
    const size_t n = static_cast<size_t>(height) * width;
    for (const auto& m : masks)
        if (m.size() != n) throw std::invalid_argument("MaskSet: mask size mismatch");
    for (size_t p = 0; p < n; ++p) {
        int hits = 0;
        for (const auto& m : masks) hits += m[p] ? 1 : 0;
        if (hits != 1) throw std::invalid_argument("MaskSet: masks must partition the grid");
    }
}

namespace {

// Between-class criterion for a fixed threshold tuple, computed from integer
// class sums so that lookup-table and direct-summation evaluations agree
// bitwise: sum_j s_j^2 / w_j with s_j = sum of count*bin, w_j = sum of count.
// Maximizing this is equivalent to maximizing sum_j w_j*(mu_j - mu_total)^2.
double class_criterion(const std::vector<long>& prefix_cnt, const std::vector<long>& prefix_sum,
                       const std::vector<int>& cuts, int num_bins) {
    double crit = 0.0;
    int lo = 0;
    const int k = static_cast<int>(cuts.size());
    for (int j = 0; j <= k; ++j) {
        const int hi = (j < k) ? cuts[j] + 1 : num_bins;  // class covers bins [lo, hi)
        const long w = prefix_cnt[hi] - prefix_cnt[lo];
        if (w > 0) {
            const long s = prefix_sum[hi] - prefix_sum[lo];
            crit += static_cast<double>(s) * static_cast<double>(s) / static_cast<double>(w);
        }
        lo = hi;
    }
    return crit;
}

void search_recursive(const std::vector<long>& pc, const std::vector<long>& ps, int num_bins,
                      int num_cuts, int depth, std::vector<int>& cur, std::vector<int>& best,
                      double& best_crit) {
    if (depth == num_cuts) {
        const double c = class_criterion(pc, ps, cur, num_bins);
        if (c > best_crit) {  // strict: ties keep the lexicographically first tuple
            best_crit = c;
            best = cur;
        }
        return;
    }
    const int start = depth == 0 ? 0 : cur[depth - 1] + 1;
    const int stop = num_bins - 1 - (num_cuts - 1 - depth);  // leave room for the rest
    for (int t = start; t < stop; ++t) {
        cur[depth] = t;
        search_recursive(pc, ps, num_bins, num_cuts, depth + 1, cur, best, best_crit);
    }
}

std::vector<int> exhaustive_search(const std::vector<long>& counts, int num_classes) {
    const int B = static_cast<int>(counts.size());
    std::vector<long> pc(B + 1, 0), ps(B + 1, 0);
    for (int b = 0; b < B; ++b) {
        pc[b + 1] = pc[b] + counts[b];
        ps[b + 1] = ps[b] + counts[b] * b;
    }
    std::vector<int> cur(num_classes - 1), best;
    double best_crit = -1.0;
    search_recursive(pc, ps, B, num_classes - 1, 0, cur, best, best_crit);
    if (best.empty()) throw std::invalid_argument("multi_otsu: not enough bins for the class count");
    return best;
}

}  // namespace

std::vector<int> multi_otsu_bins(const std::vector<long>& counts, int num_classes) {
    const int B = static_cast<int>(counts.size());
    if (num_classes < 2 || num_classes > 6)
        throw std::invalid_argument("multi_otsu: class count must be in [2, 6]");
    if (B < num_classes) throw std::invalid_argument("multi_otsu: fewer bins than classes");

    if (num_classes <= 4 || B <= 64) return exhaustive_search(counts, num_classes);

    // coarse-to-fine for K in {5,6} at large B: solve on <=64 merged bins,
    // then refine each cut within +-2 fine bins
    const int factor = (B + 63) / 64;
    const int CB = (B + factor - 1) / factor;
    std::vector<long> coarse(CB, 0);
    for (int b = 0; b < B; ++b) coarse[b / factor] += counts[b];
    const std::vector<int> coarse_cuts = exhaustive_search(coarse, num_classes);

    std::vector<long> pc(B + 1, 0), ps(B + 1, 0);
    for (int b = 0; b < B; ++b) {
        pc[b + 1] = pc[b] + counts[b];
        ps[b + 1] = ps[b] + counts[b] * b;
    }
    const int k = num_classes - 1;
    std::vector<std::vector<int>> windows(k);
    for (int j = 0; j < k; ++j) {
        const int guess = (coarse_cuts[j] + 1) * factor - 1;  // fine bin at the coarse boundary
        for (int t = guess - 2; t <= guess + 2; ++t)
            if (t >= 0 && t < B - 1) windows[j].push_back(t);
    }
    std::vector<int> idx(k, 0), cur(k), best;
    double best_crit = -1.0;
    while (true) {
        bool valid = true;
        for (int j = 0; j < k; ++j) {
            cur[j] = windows[j][idx[j]];
            if (j > 0 && cur[j] <= cur[j - 1]) valid = false;
        }
        if (valid) {
            const double c = class_criterion(pc, ps, cur, B);
            if (c > best_crit) {
                best_crit = c;
                best = cur;
            }
        }
        int j = k - 1;
        while (j >= 0 && ++idx[j] == static_cast<int>(windows[j].size())) idx[j--] = 0;
        if (j < 0) break;
    }
    if (best.empty()) throw std::invalid_argument("multi_otsu: refinement found no valid tuple");
    return best;
}

std::vector<double> multi_otsu(const ImageGrid& image, int num_classes, int num_bins) {
    if (num_classes < 2 || num_classes > 6)
        throw std::invalid_argument("multi_otsu: class count must be in [2, 6]");
    if (num_bins < num_classes) throw std::invalid_argument("multi_otsu: fewer bins than classes");
    std::set<double> distinct(image.data.begin(), image.data.end());
    if (static_cast<int>(distinct.size()) < num_classes)
        throw std::invalid_argument("multi_otsu: image has fewer distinct values than classes");

    const Histogram h = make_histogram(image, num_bins);
    const std::vector<int> cuts = multi_otsu_bins(h.counts, num_classes);
    std::vector<double> thresholds(cuts.size());
    for (size_t j = 0; j < cuts.size(); ++j) thresholds[j] = h.upper_edge(cuts[j]);
    return thresholds;
}

MaskSet masks_from_thresholds(const ImageGrid& image, const std::vector<double>& thresholds) {
    for (size_t j = 1; j < thresholds.size(); ++j)
        if (!(thresholds[j] > thresholds[j - 1]))
            throw std::invalid_argument("masks_from_thresholds: thresholds must be strictly increasing");
    MaskSet set;
    set.height = image.height;
    set.width = image.width;
    const size_t n = image.size();
    set.masks.assign(thresholds.size() + 1, std::vector<uint8_t>(n, 0));
    for (size_t p = 0; p < n; ++p) {
        const double v = image.data[p];
        // region j where t_{j-1} < v <= t_j; a value equal to a threshold
        // joins the lower region
        const size_t j = std::lower_bound(thresholds.begin(), thresholds.end(), v) -
                         thresholds.begin();
        set.masks[j][p] = 1;
    }
    return set;
}

RegionMeans region_means(const ImageGrid& image, const MaskSet& masks) {
    if (masks.height != image.height || masks.width != image.width)
        throw std::invalid_argument("region_means: mask dimensions differ from image");
    RegionMeans out;
    out.means.resize(masks.num_materials());
    out.degenerate.resize(masks.num_materials());
    for (int k = 0; k < masks.num_materials(); ++k) {
        double sum = 0.0;
        long cnt = 0;
        for (size_t p = 0; p < image.size(); ++p) {
            if (masks.masks[k][p] && image.data[p] != 0.0) {
                sum += image.data[p];
                ++cnt;
            }
        }
        out.means[k] = cnt > 0 ? sum / cnt : 0.0;
        out.degenerate[k] = cnt == 0;
    }
    return out;
}

}  // namespace acind

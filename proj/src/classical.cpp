#include "acind/classical.hpp"

#include <cmath>
#include <numbers>

#include "acind/projector.hpp"
#include "acind/threading.hpp"

namespace acind {

ImageGrid fbp(const Sinogram& sino, const ScanGeometry& geom) {
    const Sinogram filtered = ramp_filter(sino, geom);
    const int H = geom.image_height, W = geom.image_width, V = geom.num_detectors;
    ImageGrid out(H, W, 0.0);
    const double cx = W / 2.0, cy = H / 2.0;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int i = 0; i < H; ++i) {
        for (int j = 0; j < W; ++j) {
            const double x = j + 0.5 - cx, y = i + 0.5 - cy;
            double acc = 0.0;
            for (int a = 0; a < geom.num_angles; ++a) {
                const double th = geom.angles[a];
                const double s = (x * std::cos(th) + y * std::sin(th)) / geom.detector_spacing +
                                 (V - 1) / 2.0;
                const double fs = std::floor(s);
                const int s0 = static_cast<int>(fs);
                const double f = s - fs;
                double q = 0.0;
                if (s0 >= 0 && s0 < V) q += (1.0 - f) * filtered.at(a, s0);
                if (s0 + 1 >= 0 && s0 + 1 < V) q += f * filtered.at(a, s0 + 1);
                acc += q;
            }
            out.at(i, j) = acc * std::numbers::pi / geom.num_angles;
        }
    }
    return out;
}

ImageGrid sirt(const Sinogram& sino, const ScanGeometry& geom, const SirtConfig& cfg) {
    if (sino.num_angles != geom.num_angles || sino.num_detectors != geom.num_detectors)
        throw std::invalid_argument("sirt: sinogram does not match geometry");
    if (cfg.num_iters < 1) throw std::invalid_argument("sirt: num_iters must be >= 1");

    const size_t n_pix = static_cast<size_t>(geom.image_height) * geom.image_width;
    const size_t n_ray = static_cast<size_t>(geom.num_angles) * geom.num_detectors;

    const ProjectionOperator op(geom);
    ImageGrid ones_img(geom.image_height, geom.image_width, 1.0);
    const Sinogram row_sums = op.apply(ones_img);
    Sinogram ones_sino(geom.num_angles, geom.num_detectors, 1.0);
    const ImageGrid col_sums = op.apply_adjoint(ones_sino);

    std::vector<double> rinv(n_ray), cinv(n_pix);
    for (size_t r = 0; r < n_ray; ++r)
        rinv[r] = row_sums.data[r] > 0.0 ? 1.0 / row_sums.data[r] : 0.0;
    for (size_t p = 0; p < n_pix; ++p)
        cinv[p] = col_sums.data[p] > 0.0 ? 1.0 / col_sums.data[p] : 0.0;

    ImageGrid x(geom.image_height, geom.image_width, 0.0);
    for (int it = 0; it < cfg.num_iters; ++it) {
        Sinogram residual = op.apply(x);
        for (size_t r = 0; r < n_ray; ++r)
            residual.data[r] = (sino.data[r] - residual.data[r]) * rinv[r];
        const ImageGrid update = op.apply_adjoint(residual);
        for (size_t p = 0; p < n_pix; ++p) {
            x.data[p] += cinv[p] * update.data[p];
            if (cfg.nonneg_clamp && x.data[p] < 0.0) x.data[p] = 0.0;
        }
    }
    return x;
}

}  // namespace acind

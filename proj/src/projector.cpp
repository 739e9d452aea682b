#include "acind/projector.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

#include "acind/threading.hpp"

namespace acind {

namespace detail {

double ramp_kernel_sample(long n) {
    if (n == 0) return 0.25;
    if (n % 2 == 0) return 0.0;
    const double pn = std::numbers::pi * static_cast<double>(n);
    return -1.0 / (pn * pn);
}

int next_pow2(int n) {
    int p = 1;
    while (p < n) p *= 2;
    return p;
}

}  // namespace detail

RayPath trace_ray(const ScanGeometry& geom, int angle_index, int detector_index) {
    const int H = geom.image_height, W = geom.image_width;
    const double theta = geom.angles[angle_index];
    const double ct = std::cos(theta), st = std::sin(theta);
    const double s = geom.detector_offset(detector_index);
    // P(t) = c + s*(ct,st) + t*(-st,ct)
    const double px = W / 2.0 + s * ct;
    const double py = H / 2.0 + s * st;
    const double ux = -st, uy = ct;

    // clip to the grid bounding box [0,W]x[0,H]
    double tmin = -1e300, tmax = 1e300;
    const double eps = 1e-12;
    if (std::abs(ux) < eps) {
        if (px <= 0.0 || px >= W) return {};
    } else {
        double t1 = (0.0 - px) / ux, t2 = (W - px) / ux;
        if (t1 > t2) std::swap(t1, t2);
        tmin = std::max(tmin, t1);
        tmax = std::min(tmax, t2);
    }
    if (std::abs(uy) < eps) {
        if (py <= 0.0 || py >= H) return {};
    } else {
        double t1 = (0.0 - py) / uy, t2 = (H - py) / uy;
        if (t1 > t2) std::swap(t1, t2);
        tmin = std::max(tmin, t1);
        tmax = std::min(tmax, t2);
    }
    if (!(tmin < tmax)) return {};

    // merge the sorted x- and y-plane crossings inside (tmin, tmax); each
    // consecutive pair of parameters bounds one cell, identified by its
    // midpoint (robust at corner crossings)
    std::vector<double> crossings;
    crossings.reserve(H + W + 2);
    crossings.push_back(tmin);
    auto push_axis = [&](double p0, double u, int n) {
        if (std::abs(u) < eps) return;
        for (int k = 0; k <= n; ++k) {
            const double t = (k - p0) / u;
            if (t > tmin + eps && t < tmax - eps) crossings.push_back(t);
        }
    };
    push_axis(px, ux, W);
    push_axis(py, uy, H);
    crossings.push_back(tmax);
    std::sort(crossings.begin(), crossings.end());

    RayPath path;
    path.segments.reserve(crossings.size());
    for (size_t k = 0; k + 1 < crossings.size(); ++k) {
        const double t0 = crossings[k], t1 = crossings[k + 1];
        const double len = t1 - t0;
        if (len <= eps) continue;
        const double tm = 0.5 * (t0 + t1);
        const int cx = static_cast<int>(std::floor(px + tm * ux));
        const int cy = static_cast<int>(std::floor(py + tm * uy));
        if (cx < 0 || cx >= W || cy < 0 || cy >= H) continue;
        path.segments.emplace_back(cy * W + cx, len);
    }
    return path;
}

ProjectionOperator::ProjectionOperator(const ScanGeometry& geom) : geom_(geom) {
    geom_.validate();
    rays_.resize(static_cast<size_t>(geom_.num_angles) * geom_.num_detectors);
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int a = 0; a < geom_.num_angles; ++a)
        for (int v = 0; v < geom_.num_detectors; ++v)
            rays_[static_cast<size_t>(a) * geom_.num_detectors + v] = trace_ray(geom_, a, v);
}

Sinogram ProjectionOperator::apply(const ImageGrid& image) const {
    if (image.height != geom_.image_height || image.width != geom_.image_width)
        throw std::invalid_argument("forward_project: image does not match geometry");
    Sinogram sino(geom_.num_angles, geom_.num_detectors);
    const int V = geom_.num_detectors;
#pragma omp parallel for schedule(static) num_threads(max_threads())
    for (int a = 0; a < geom_.num_angles; ++a) {
        for (int v = 0; v < V; ++v) {
            double acc = 0.0;
            for (const auto& [idx, len] : ray(a, v).segments) acc += len * image.data[idx];
            sino.at(a, v) = acc;
        }
    }
    return sino;
}

ImageGrid ProjectionOperator::apply_adjoint(const Sinogram& sino) const {
    if (sino.num_angles != geom_.num_angles || sino.num_detectors != geom_.num_detectors)
        throw std::invalid_argument("back_project: sinogram does not match geometry");
    ImageGrid image(geom_.image_height, geom_.image_width, 0.0);
    // serial scatter: exact transpose with a fixed accumulation order
    for (int a = 0; a < geom_.num_angles; ++a) {
        for (int v = 0; v < geom_.num_detectors; ++v) {
            const double val = sino.at(a, v);
            if (val == 0.0) continue;
            for (const auto& [idx, len] : ray(a, v).segments) image.data[idx] += len * val;
        }
    }
    return image;
}

Sinogram forward_project(const ImageGrid& image, const ScanGeometry& geom) {
    return ProjectionOperator(geom).apply(image);
}

ImageGrid back_project(const Sinogram& sino, const ScanGeometry& geom) {
    return ProjectionOperator(geom).apply_adjoint(sino);
}

namespace {
std::mutex fftw_plan_mutex;
}

Sinogram ramp_filter(const Sinogram& sino, const ScanGeometry& geom) {
    if (sino.num_angles != geom.num_angles || sino.num_detectors != geom.num_detectors)
        throw std::invalid_argument("ramp_filter: sinogram does not match geometry");
    const int V = geom.num_detectors;
    if (V < 2) throw std::invalid_argument("ramp_filter: need at least 2 detectors");
    const int N = 2 * detail::next_pow2(V);
    const int NC = N / 2 + 1;

    std::vector<double> real_buf(N, 0.0);
    std::vector<std::complex<double>> cplx_buf(NC);
    fftw_plan fwd, inv;
    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fwd = fftw_plan_dft_r2c_1d(N, real_buf.data(),
                                   reinterpret_cast<fftw_complex*>(cplx_buf.data()), FFTW_ESTIMATE);
        inv = fftw_plan_dft_c2r_1d(N, reinterpret_cast<fftw_complex*>(cplx_buf.data()),
                                   real_buf.data(), FFTW_ESTIMATE);
    }

    // frequency response = DFT of the wrapped spatial kernel (real, even)
    std::fill(real_buf.begin(), real_buf.end(), 0.0);
    real_buf[0] = detail::ramp_kernel_sample(0);
    for (int n = 1; n <= N / 2; ++n) {
        const double h = detail::ramp_kernel_sample(n);
        real_buf[n] = h;
        real_buf[N - n] = h;
    }
    fftw_execute(fwd);
    std::vector<double> response(NC);
    for (int k = 0; k < NC; ++k) response[k] = cplx_buf[k].real();

    Sinogram out(sino.num_angles, V);
    for (int a = 0; a < sino.num_angles; ++a) {
        std::fill(real_buf.begin(), real_buf.end(), 0.0);
        for (int v = 0; v < V; ++v) real_buf[v] = sino.at(a, v);
        fftw_execute(fwd);
        for (int k = 0; k < NC; ++k) cplx_buf[k] *= response[k] / N;
        fftw_execute(inv);
        for (int v = 0; v < V; ++v) out.at(a, v) = real_buf[v];
    }

    {
        std::lock_guard<std::mutex> lock(fftw_plan_mutex);
        fftw_destroy_plan(fwd);
        fftw_destroy_plan(inv);
    }
    return out;
}

}  // namespace acind

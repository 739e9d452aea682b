#include "acind/metrics.hpp"

#include <array>
#include <cmath>
#include <limits>

namespace acind {

namespace {
constexpr int kSsimWindow = 11;
constexpr double kSsimSigma = 1.5;
}  // namespace

double psnr(const ImageGrid& reference, const ImageGrid& test, double data_range) {
    require_same_shape(reference, test, "psnr");
    if (!(data_range > 0.0)) throw std::invalid_argument("psnr: data_range must be positive");
    double mse = 0.0;
    for (size_t i = 0; i < reference.data.size(); ++i) {
        const double d = reference.data[i] - test.data[i];
        mse += d * d;
    }
    mse /= static_cast<double>(reference.data.size());
    if (mse == 0.0) return std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(data_range * data_range / mse);
}

double ssim(const ImageGrid& reference, const ImageGrid& test, double data_range) {
    require_same_shape(reference, test, "ssim");
    if (!(data_range > 0.0)) throw std::invalid_argument("ssim: data_range must be positive");
    if (reference.height < kSsimWindow || reference.width < kSsimWindow)
        throw std::invalid_argument("ssim: grid smaller than the 11x11 window");

    // normalized Gaussian window
    std::array<double, kSsimWindow * kSsimWindow> w{};
    const int r = kSsimWindow / 2;
    double wsum = 0.0;
    for (int dy = -r; dy <= r; ++dy)
        for (int dx = -r; dx <= r; ++dx) {
            const double g = std::exp(-(dy * dy + dx * dx) / (2.0 * kSsimSigma * kSsimSigma));
            w[(dy + r) * kSsimWindow + (dx + r)] = g;
            wsum += g;
        }
    for (double& v : w) v /= wsum;

    const double c1 = (0.01 * data_range) * (0.01 * data_range);
    const double c2 = (0.03 * data_range) * (0.03 * data_range);

    double total = 0.0;
    long count = 0;
    for (int i = r; i < reference.height - r; ++i) {
        for (int j = r; j < reference.width - r; ++j) {
            double mx = 0.0, my = 0.0, mxx = 0.0, myy = 0.0, mxy = 0.0;
            for (int dy = -r; dy <= r; ++dy)
                for (int dx = -r; dx <= r; ++dx) {
                    const double wk = w[(dy + r) * kSsimWindow + (dx + r)];
                    const double x = reference.at(i + dy, j + dx);
                    const double y = test.at(i + dy, j + dx);
                    mx += wk * x;
                    my += wk * y;
                    mxx += wk * x * x;
                    myy += wk * y * y;
                    mxy += wk * x * y;
                }
            const double vx = mxx - mx * mx;
            const double vy = myy - my * my;
            const double cxy = mxy - mx * my;
            total += ((2.0 * mx * my + c1) * (2.0 * cxy + c2)) /
                     ((mx * mx + my * my + c1) * (vx + vy + c2));
            ++count;
        }
    }
    return total / static_cast<double>(count);
}

double l2_distance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw std::invalid_argument("l2_distance: length mismatch");
    double s = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return std::sqrt(s);
}

}  // namespace acind

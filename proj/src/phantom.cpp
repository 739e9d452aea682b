#include "acind/phantom.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "acind/projector.hpp"

namespace acind {

void MaterialSpec::validate() const {
    if (values.empty()) throw std::invalid_argument("MaterialSpec: no materials");
    if (values[0] != 0.0) throw std::invalid_argument("MaterialSpec: background (label 1) must be 0");
    std::set<double> distinct(values.begin(), values.end());
    if (distinct.size() != values.size())
        throw std::invalid_argument("MaterialSpec: attenuation values must be distinct");
}

MaterialSpec MaterialSpec::defaults(int num_materials) {
    if (num_materials < 1) throw std::invalid_argument("MaterialSpec: need >= 1 material");
    static const std::array<double, 6> canned = {0.0, 0.5, 1.0, 1.3, 1.8, 2.5};
    MaterialSpec spec;
    for (int k = 0; k < num_materials; ++k)
        spec.values.push_back(k < static_cast<int>(canned.size())
                                  ? canned[k]
                                  : 2.5 + 0.4 * (k - static_cast<int>(canned.size()) + 1));
    spec.validate();
    return spec;
}

void PhantomPair::validate() const {
    image.validate();
    labels.validate();
    if (labels.height != image.height || labels.width != image.width)
        throw std::invalid_argument("PhantomPair: label map dimensions differ from image");
    for (size_t p = 0; p < image.size(); ++p)
        if (image.data[p] != true_acv[labels.labels[p] - 1])
            throw std::invalid_argument("PhantomPair: image value does not match its label's AC");
}

PhantomPair phantom_from_ellipses(int height, int width, const MaterialSpec& spec,
                                  const std::vector<Ellipse>& ellipses) {
    spec.validate();
    const int K = spec.num_materials();
    if (ellipses.empty() && K > 1)
        throw std::invalid_argument("phantom_from_ellipses: no ellipses for a multi-material spec");
    PhantomPair pair;
    pair.labels = LabelMap(height, width, K, 1);
    for (const Ellipse& e : ellipses) {
        if (e.material < 1 || e.material > K)
            throw std::invalid_argument("phantom_from_ellipses: ellipse material out of range");
        if (!(e.semi_i > 0.0 && e.semi_j > 0.0))
            throw std::invalid_argument("phantom_from_ellipses: degenerate ellipse");
        const double c = std::cos(e.rotation), s = std::sin(e.rotation);
        for (int i = 0; i < height; ++i) {
            for (int j = 0; j < width; ++j) {
                const double di = i + 0.5 - e.center_i;
                const double dj = j + 0.5 - e.center_j;
                const double xr = dj * c + di * s;
                const double yr = -dj * s + di * c;
                const double q = (yr / e.semi_i) * (yr / e.semi_i) +
                                 (xr / e.semi_j) * (xr / e.semi_j);
                if (q <= 1.0) pair.labels.at(i, j) = e.material;
            }
        }
    }
    pair.image = ImageGrid(height, width);
    for (size_t p = 0; p < pair.image.size(); ++p)
        pair.image.data[p] = spec.values[pair.labels.labels[p] - 1];
    pair.true_acv = spec.values;
    pair.validate();
    return pair;
}

PhantomPair ellipse_material_phantom(uint64_t seed, int height, int width,
                                     const MaterialSpec& spec, int num_ellipses) {
    spec.validate();
    if (num_ellipses == 0 && spec.num_materials() > 1)
        throw std::invalid_argument("ellipse_material_phantom: zero ellipses with K > 1");
    Rng rng(Rng::derive_seed(seed, 0xe11f));
    std::vector<Ellipse> ellipses;
    const int K = spec.num_materials();
    for (int e = 0; e < num_ellipses; ++e) {
        Ellipse el;
        el.center_i = rng.uniform(0.30, 0.70) * height;
        el.center_j = rng.uniform(0.30, 0.70) * width;
        el.semi_i = rng.uniform(0.09, 0.22) * height;
        el.semi_j = rng.uniform(0.09, 0.22) * width;
        el.rotation = rng.uniform(0.0, std::numbers::pi);
        el.material = K > 1 ? 2 + e % (K - 1) : 1;
        ellipses.push_back(el);
    }
    return phantom_from_ellipses(height, width, spec, ellipses);
}

PhantomPair barbapapa_like_phantom(int height, int width, const std::array<double, 3>& ac_values) {
    if (ac_values[0] != 0.0 || ac_values[1] == ac_values[2] || ac_values[1] == 0.0 ||
        ac_values[2] == 0.0)
        throw std::invalid_argument("barbapapa_like_phantom: values must be distinct, background 0");
    MaterialSpec spec;
    spec.values = {ac_values[0], ac_values[1], ac_values[2]};

    // fixed blob-union body + inclusions, fractions of the grid size
    struct Disc {
        double ci, cj, r;
        int material;
    };
    static const std::array<Disc, 9> discs = {{
        {0.42, 0.50, 0.26, 2},
        {0.62, 0.44, 0.16, 2},
        {0.60, 0.60, 0.14, 2},
        {0.30, 0.42, 0.12, 2},
        {0.34, 0.62, 0.10, 2},
        {0.40, 0.48, 0.070, 3},
        {0.58, 0.52, 0.050, 3},
        {0.33, 0.60, 0.035, 3},
        {0.62, 0.38, 0.040, 3},
    }};
    std::vector<Ellipse> ellipses;
    const double scale = std::min(height, width);
    for (const Disc& d : discs) {
        Ellipse e;
        e.center_i = d.ci * height;
        e.center_j = d.cj * width;
        e.semi_i = e.semi_j = d.r * scale;
        e.material = d.material;
        ellipses.push_back(e);
    }
    return phantom_from_ellipses(height, width, spec, ellipses);
}

ImageGrid shepp_logan_phantom(int height, int width) {
    // modified (high-contrast) parameter table; additive intensities in the
    // unit square, y axis pointing up
    struct E {
        double value, a, b, x0, y0, phi_deg;
    };
    static const std::array<E, 10> table = {{
        {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
        {-0.8, 0.6624, 0.8740, 0.0, -0.0184, 0.0},
        {-0.2, 0.1100, 0.3100, 0.22, 0.0, -18.0},
        {-0.2, 0.1600, 0.4100, -0.22, 0.0, 18.0},
        {0.1, 0.2100, 0.2500, 0.0, 0.35, 0.0},
        {0.1, 0.0460, 0.0460, 0.0, 0.1, 0.0},
        {0.1, 0.0460, 0.0460, 0.0, -0.1, 0.0},
        {0.1, 0.0460, 0.0230, -0.08, -0.605, 0.0},
        {0.1, 0.0230, 0.0230, 0.0, -0.606, 0.0},
        {0.1, 0.0230, 0.0460, 0.06, -0.605, 0.0},
    }};
    ImageGrid img(height, width, 0.0);
    for (int i = 0; i < height; ++i) {
        for (int j = 0; j < width; ++j) {
            const double x = (j + 0.5 - width / 2.0) / (width / 2.0);
            const double y = (height / 2.0 - (i + 0.5)) / (height / 2.0);
            double v = 0.0;
            for (const E& e : table) {
                const double phi = e.phi_deg * std::numbers::pi / 180.0;
                const double c = std::cos(phi), s = std::sin(phi);
                const double xr = (x - e.x0) * c + (y - e.y0) * s;
                const double yr = -(x - e.x0) * s + (y - e.y0) * c;
                if ((xr / e.a) * (xr / e.a) + (yr / e.b) * (yr / e.b) <= 1.0) v += e.value;
            }
            img.at(i, j) = v;
        }
    }
    return img;
}

Sinogram simulate_scan(const PhantomPair& pair, const ScanGeometry& geom, double noise_sigma,
                       uint64_t noise_seed) {
    if (noise_sigma < 0.0) throw std::invalid_argument("simulate_scan: negative noise sigma");
    Sinogram sino = forward_project(pair.image, geom);
    if (noise_sigma > 0.0) {
        Rng rng(Rng::derive_seed(noise_seed, 0x5ca4));
        for (double& v : sino.data) v += rng.normal(0.0, noise_sigma);
    }
    return sino;
}

}  // namespace acind
